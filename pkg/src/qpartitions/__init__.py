"""qpartitions: exact q-series arithmetic, partition oracles, identity checks.

The package is organized around one value type and three layers:

- :mod:`~qpartitions.series` / :mod:`~qpartitions.qobjects`: truncated
  Laurent series over the integers and the q-Pochhammer / Gaussian-binomial
  primitives built on them;
- :mod:`~qpartitions.enumeration`: brute-force generators and counters for
  restricted partitions, overpartitions, and regular partitions;
- :mod:`~qpartitions.closed_forms` / :mod:`~qpartitions.identities`: the
  closed-form generating functions, the identity catalog, and the
  verification engine comparing closed forms against enumeration;
- :mod:`~qpartitions.dsl` / :mod:`~qpartitions.cli`: a small expression
  language and the command-line front end.
"""

from .series import LaurentSeries, NonInvertibleError, SeriesError, WindowError
from .qobjects import (
    Monomial,
    PochhammerError,
    euler_qinf,
    multi_poch_infinite,
    poch_finite,
    poch_finite_window,
    poch_infinite,
    q_hyper_sum,
    qbin,
    qbinomial_theorem_lhs_rhs,
)
from .enumeration import (
    Overpartition,
    Partition,
    PartitionFilter,
    count_Q,
    count_a,
    count_a_diff,
    count_abar,
    count_abar_diff,
    count_areg,
    count_areg_diff,
    count_breg,
    count_breg_diff,
    count_p,
    count_p_fixed_diff,
    count_p_star,
    count_pbar,
    count_pbar_diff,
    count_ubar,
    gen_overpartitions,
    gen_partitions,
)
from .closed_forms import (
    a2_via_p,
    a3_via_p,
    a4_via_p,
    aG1_via_p,
    bracket_polynomial,
    gf_a_m_diff,
    gf_a_m_sum,
    gf_a_m_thm,
    gf_a_m_thm_correction,
    gf_abar_m,
    gf_abar_m_alt,
    gf_areg,
    gf_areg_l2,
    gf_breg,
    gf_pbar,
    gf_ubar,
    remark7_rhs,
)
from .identities import (
    Identity,
    UnknownIdentityError,
    VerificationReport,
    bijection_over1,
    bijection_prop3,
    bijection_prop3_inverse,
    registry,
    verify,
)
from .dsl import DslEvalError, DslSyntaxError, eval_text, evaluate, format_ast, parse

__version__ = "0.1.0"
