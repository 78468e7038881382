"""quadguess: guess quadratic differential equations and the equivalent
quadratic recurrences from a finite prefix of an exact rational sequence,
and extend sequences from such equations."""

from quadguess.equations import (QuadEquation, compile_term,
                                 equation_from_json, equation_from_obj,
                                 equation_to_json, equation_to_obj, render,
                                 render_latex, render_text, render_tree)
from quadguess.errors import (DegenerateInputError, EquationFormatError,
                              InconsistentInitialTermsError,
                              InsufficientTermsError,
                              LeadingCoefficientZeroError, NonlinearStepError,
                              PrefixFormatError, QuadGuessError)
from quadguess.exact import (LinearForm, Polynomial, falling_weight,
                             format_rational, nullspace, parse_rational,
                             poly_eval, rat_arith)
from quadguess.guessing import (GuessConfig, GuessResult, assemble_system,
                                guess, normalize)
from quadguess.kernel import BACKEND as KERNEL_BACKEND
from quadguess.monomials import (QuadMonomial, index_of_pair,
                                 monomial_of_index, monomial_of_orders, nu)
from quadguess.prefix import (SequencePrefix, dump_prefix, load_prefix,
                              parse_prefix_text)
from quadguess.sequences import (ORACLES, CheckReport, check, extend,
                                 oracle_sequence)

__version__ = "0.1.0"
