""" Bookramsey workbench """

from .codec.cnf import encode_arrowing_cnf
from .engine.enumeration import SHARD_ORDER, count_graphs
from .engine.ramsey import (
    arrows,
    find_counterexample,
    goodness_report,
    ramsey_exact,
    verify_witness
)
from .entities.graph import is_count
from .exceptions import InputError
from .extremal import assemble_eq2_bound, dk_value
from .logger import get_logger
from .structure import (
    BLOWUP_BUDGET,
    find_induced_blowup,
    partition_diagnostics,
    peel_and_partition,
    refine_partition
)
from .utils import Configuration


LOGGER = get_logger(__name__)


# pylint: disable=attribute-defined-outside-init
class BookRamsey(object):
    """
    Search parameters bound to the Ramsey, ``d_k`` and structure
    operations.

    :param int workers: Worker processes of the sharded searches.
    :param int shard_order: Level of the augmentation tree where shards
        are cut.
    :param int blowup_budget: Node budget of :meth:`find_induced_blowup`.
    :param float epsilon: Default threshold of :meth:`diagnose`.
    :param int dk_lookahead: Consecutive failing ``d`` values that end
        :meth:`dk`.
    :param str log_config: Optional logging YAML applied on creation.
    """

    def __init__(self,
                 workers=1,
                 shard_order=SHARD_ORDER,
                 blowup_budget=BLOWUP_BUDGET,
                 epsilon=0.1,
                 dk_lookahead=1,
                 log_config=''):
        self.workers = workers
        self.shard_order = shard_order
        self.blowup_budget = blowup_budget
        self.epsilon = epsilon
        self.dk_lookahead = dk_lookahead
        self._logger = get_logger(__name__, log_config) if log_config else LOGGER

    def __repr__(self):
        return '{}(workers={}, shard_order={})'.format(
            self.__class__.__name__, self._workers, self._shard_order
        )

    @classmethod
    def from_ini(cls, profile, ini_file):
        r"""
        Initialization through a **INI** configuration file.

        ``INI`` structure:

        ``
        [<profile>:bookramsey:search]
        option1=value1
        option2=value2
        ``

        :param str profile: Profile name.
        :param str ini_file: Relative or absolute path.
        :returns: :class: A `BookRamsey` instance.
        :raises ConfigurationError: Missing configuration file path.
        :raises ConfigurationSectionError: Invald section name.
        """
        c = Configuration(profile, ini_file)
        c.read()
        return cls(**c.settings())

    @property
    def workers(self):
        return self._workers

    @workers.setter
    def workers(self, workers):
        self._workers = self._positive('workers', workers)

    @property
    def shard_order(self):
        return self._shard_order

    @shard_order.setter
    def shard_order(self, shard_order):
        self._shard_order = self._positive('shard_order', shard_order)

    @property
    def blowup_budget(self):
        return self._blowup_budget

    @blowup_budget.setter
    def blowup_budget(self, budget):
        self._blowup_budget = self._positive('blowup_budget', budget)

    @property
    def epsilon(self):
        return self._epsilon

    @epsilon.setter
    def epsilon(self, epsilon):
        if not 0 < epsilon < 1:
            raise InputError("'epsilon' must lie in (0, 1), got {!r}".format(epsilon))
        self._epsilon = float(epsilon)

    @property
    def dk_lookahead(self):
        return self._dk_lookahead

    @dk_lookahead.setter
    def dk_lookahead(self, lookahead):
        self._dk_lookahead = self._positive('dk_lookahead', lookahead)

    @staticmethod
    def _positive(name, value):
        if not is_count(value) or value < 1:
            raise InputError("Not a valid '{}':{!r}".format(name, value))
        return value

    def verify_witness(self, g, query):
        certificate = verify_witness(g, query)
        self._log('verified {} on {} vertices: certified={}'.format(
            query, g.order, certificate.certified
        ))
        return certificate

    def find_counterexample(self, order, query):
        return find_counterexample(order, query, self._workers, self._shard_order)

    def arrows(self, order, query):
        return arrows(order, query, self._workers, self._shard_order)

    def ramsey_exact(self, query, n_max):
        """
        :returns RamseyBound: See :func:`bookramsey.engine.ramsey.ramsey_exact`.
        :raises CapacityError: ``n_max`` above the enumeration cap.
        """
        self._log('exact search for {} up to {} vertices'.format(query, n_max))
        return ramsey_exact(query, n_max, self._workers)

    def goodness(self, query, n_max):
        """
        :returns: A :class:`GoodnessReport`, or ``None`` when the exact
            value lies above ``n_max``.
        """
        bound = self.ramsey_exact(query, n_max)
        if not bound.exact:
            return None
        return goodness_report(query, bound.value)

    def dk(self, query):
        self._log('computing {}'.format(query))
        return dk_value(query, self._dk_lookahead, self._workers, self._shard_order)

    def assemble_eq2_bound(self, p, n, dk, query):
        certificate = assemble_eq2_bound(p, n, dk, query)
        self._log('assembled d_k witness against {}: certified_lower={}'.format(
            query, certificate.certified_lower
        ))
        return certificate

    def census(self, order):
        return count_graphs(order, None, self._workers, self._shard_order)

    def partition(self, g, classes, seed=None):
        return refine_partition(g, classes, seed)

    def diagnose(self, g, state, epsilon=None, pattern=None):
        return partition_diagnostics(
            g, state, self._epsilon if epsilon is None else epsilon, pattern
        )

    def peel(self, g, threshold, classes, a2, seed=None):
        return peel_and_partition(g, threshold, classes, a2, seed)

    def find_induced_blowup(self, g, r, t):
        result = find_induced_blowup(g, r, t, self._blowup_budget)
        self._log('K_{}({}) blowup search: {} after {} node(s)'.format(
            r, t, result.outcome, result.nodes
        ))
        return result

    def export_cnf(self, order, query):
        return encode_arrowing_cnf(order, query)

    def _log(self, action, log=True):
        if log:
            self._logger.info('Workbench %s', action)
