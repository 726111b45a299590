import os
import logging
import logging.config
import yaml


__all__ = ['get_logger']

_PACKAGED_CONFIG = os.path.join(os.path.dirname(__file__), 'logging.yaml')
_APPLIED = {}


def get_logger(name, cfg_path=None):
    """
    Setup a logger instance.

    .. note::

        Loggers are **singletons**, calling this function with the same
        name always returns the same logger. A configuration file is
        applied once; later calls with the same path only fetch the logger.

    :param str name: Name of the logger, module or class name.
    :param str cfg_path: Logging configuration file path, defaults to the
        packaged ``logging.yaml`` when omitted or not found.
    :returns: a ``Logger`` instance.
    """
    if cfg_path is None or not os.path.exists(cfg_path):
        cfg_path = _PACKAGED_CONFIG
    cfg_path = os.path.abspath(cfg_path)
    if cfg_path not in _APPLIED:
        with open(cfg_path, 'r') as stream:
            config = yaml.safe_load(stream)
        logging.config.dictConfig(config)
        _APPLIED[cfg_path] = config
    return logging.getLogger(name)
