"""Resolution, Milnor numbers and topological types of plane curve germs."""
from .algebra import FieldTower, Polynomial, UPoly, parse_polynomial, rationals
from .classify import (Atom, Composition, Tower, classify, is_equivalent, model_germ,
                       normalize, parse_type, type_to_string)
from .errors import (CommonComponent, CurveSingError, ExtensionDepthExceeded,
                     MaxDepthExceeded, ModelConstructionFailed, NonReducedInput,
                     NotApplicable, PolynomialSyntaxError)
from .newton import newton_boundary, newton_number_mu
from .resolve import (EngineConfig, ResolutionGraph, acampo_mu, intersection_multiplicity,
                      milnor_number, resolve)
from .tables import theorem_tables
from .torus import (TABLE_DISCREPANCY, TorusCurve, build, census, dispatch_case, predict,
                    run_goldens, verify)

__all__ = [
    "FieldTower", "Polynomial", "UPoly", "parse_polynomial", "rationals",
    "Atom", "Composition", "Tower", "classify", "is_equivalent", "model_germ",
    "normalize", "parse_type", "type_to_string",
    "CommonComponent", "CurveSingError", "ExtensionDepthExceeded", "MaxDepthExceeded",
    "ModelConstructionFailed", "NonReducedInput", "NotApplicable", "PolynomialSyntaxError",
    "newton_boundary", "newton_number_mu",
    "EngineConfig", "ResolutionGraph", "acampo_mu", "intersection_multiplicity",
    "milnor_number", "resolve",
    "theorem_tables",
    "TABLE_DISCREPANCY", "TorusCurve", "build", "census", "dispatch_case", "predict",
    "run_goldens", "verify",
]
