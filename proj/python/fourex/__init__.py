"""Boundary-interval fast Fourier extension."""

from ._fourex import (
    ExtensionConfig,
    ExtensionOperator,
    FourierApproximant,
    NumericalError,
    airy_ai,
    alternate_config,
    approximate,
    approximate_catalog,
    catalog_names,
    default_config,
    erf,
    fulldata_fe,
    grid,
    load_operator,
    max_error_catalog,
    precompute_operator,
    save_operator,
    test_function,
)

__all__ = [
    "ExtensionConfig",
    "ExtensionOperator",
    "FourierApproximant",
    "NumericalError",
    "airy_ai",
    "alternate_config",
    "approximate",
    "approximate_catalog",
    "catalog_names",
    "default_config",
    "erf",
    "fulldata_fe",
    "grid",
    "load_operator",
    "max_error_catalog",
    "precompute_operator",
    "save_operator",
    "test_function",
]
