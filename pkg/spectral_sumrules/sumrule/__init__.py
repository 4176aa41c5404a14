from .polynomial import QuadPoly
from .report import CheckReport
from .quadratic import p_poly, q_poly, generalized_p_poly, gap_indices, partial_moments, check_identity, check_inequality, batch_check
from .sequence import check_gap_condition, spectrum_gap_condition, recurrence_counts
from .shifted import shifted_sumrule_check, orthogonal_pair_check
