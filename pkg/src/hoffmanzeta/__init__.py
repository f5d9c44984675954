"""Multi-route high-precision evaluation of H(r,s) = zeta({2}^r, 3, {2}^s) and
T(r,s) = t({2}^r, 3, {2}^s), with exact checks of the supporting binomial identities."""
from .closed_forms import (CoefficientRow, h_lyh, h_zagier, k_murakami, murakami_coeff,
                           t_lyh, t_murakami, zagier_coeff)
from .constants import ConstantCache, log2, pi, t_all_twos, zeta_all_twos, zeta_int
from .direct import Index, hoffman_index, mzv_direct, tvalue_direct
from .numerics import (ConfigurationError, EvalResult, PrecisionContext, Route, agree_digits,
                       make_context)
from .series import (a_series, b_sum_closed, b_sum_definition, c_series, d_sum_closed,
                     d_sum_definition, lupu_closed_form, lupu_series_direct)
from .verify import emit_report, run_exact_checks, run_grid

__version__ = "0.1.0"
