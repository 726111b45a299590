""" Bookramsey package utilities """

from six.moves import configparser
from .exceptions import (
    ConfigurationError,
    ConfigurationSectionError
)


class Configuration(object):
    """
    Search parameters through an ``INI`` file.

    ``INI`` structure:

    ``
    [<profile>:bookramsey:search]
    workers=1
    shard_order=4
    ``

    :param str profile: Profile name, the prefix of the section.
    :param str config: ``INI`` file path.
    """

    SUBSECTION = 'bookramsey:search'
    DEFAULTS = {
        'workers': 1,
        'shard_order': 4,
        'blowup_budget': 100000,
        'epsilon': 0.1,
        'dk_lookahead': 1,
        'log_config': '',
    }

    def __init__(self, profile, config):
        self._profile = profile
        self._config = config
        self._parser = configparser.ConfigParser()

    @property
    def section(self):
        return '{}:{}'.format(
            self._profile, self.__class__.SUBSECTION
        )

    def read(self):
        """
        Read the INI configuration file.

        :returns: Nothing.
        :raises ConfigurationError: Non-existing configuration.
        """
        read_ok = self._parser.read(self._config)
        if not read_ok:
            raise ConfigurationError(
                "Configuration file '{}' not found".format(self._config)
            )

    def items(self):
        """
        Get all ``INI`` option value pairs for the profile section.

        :returns dict: Raw option values of the section.
        :raises ConfigurationSectionError: In case section is invalid.
        """
        try:
            items = self._parser.items(self.section)
        except configparser.NoSectionError:
            raise ConfigurationSectionError(
                "Invalid section, should be <profile>:{}"
                .format(self.__class__.SUBSECTION)
            )
        else:
            return dict(items)

    def settings(self):
        """
        Section options converted to the type of their default value.

        .. note::

            Unknown options are ignored silently, missing ones
            take the default value.

        :returns dict: Typed settings for every known option.
        :raises ConfigurationSectionError: In case section is invalid.
        :raises ConfigurationError: In case an option has a bad value.
        """
        settings = dict(self.__class__.DEFAULTS)
        for key, value in self.items().items():
            if key not in settings:
                continue
            value_type = type(settings[key])
            try:
                settings[key] = value_type(value)
            except ValueError:
                raise ConfigurationError(
                    "Option '{}' in section '{}' has invalid value {!r}"
                    .format(key, self.section, value)
                )
        return settings
