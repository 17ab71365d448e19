"""Spectral analysis of the Dirac operator coupled to a shell on a closed surface.

Submodules are imported on first attribute access so that the command-line
entry point can configure threading before the numerics stack loads.
"""
import importlib

__version__ = "0.1.0"

_SUBMODULES = ("algebra", "kernels", "modes", "eigen", "surfaces",
               "operators", "confinement", "serialize", "report", "cli")

_EXPORTS = {
    "SpectralParams": "kernels",
    "ModeCoefficients": "modes",
    "ModeIndex": "modes",
    "MinP": "modes",
    "EigenQuery": "eigen",
    "EigenCurve": "eigen",
    "EigenDensity": "eigen",
    "SurfacePatchization": "surfaces",
    "DiscreteOperator": "operators",
    "ResolvedBasis": "operators",
    "CouplingSpec": "confinement",
}

__all__ = list(_SUBMODULES) + list(_EXPORTS)


def __getattr__(name):
    if name in _SUBMODULES:
        return importlib.import_module(f".{name}", __name__)
    if name in _EXPORTS:
        mod = importlib.import_module(f".{_EXPORTS[name]}", __name__)
        return getattr(mod, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


def __dir__():
    return sorted(__all__ + ["__version__"])
