"""Extension- and labeling-based semantics for abstract dialectical frameworks."""
from .errors import AdfError, CapExceededError, InstanceError, ParseError
from .logic import Interpretation, Value, completions, eval_formula, leq_info, meet
from .model import AdfInstance, DungAf, format_adf, from_dung_af, parse_adf, parse_af
from .decisive import Decision, is_decisive, min_dec
from .acyclic import AcyclicPdEvaluation, blocks, enumerate_acyclic_evaluations, exists_unblocked_evaluation
from .ranges import acyclic_range_interpretation, range_interpretation
from .extensions import SEMANTICS, enumerate_extensions, grounded_extension, is_extension
from .labelings import gamma, grounded_labeling, is_stable_model, labelings, preferred_labelings, reduct
from ._mode import oracle_paths

__version__ = "0.1.0"
