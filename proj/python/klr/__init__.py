import json

from ._core import ConfigError, Context, CyclotomicAlgebra, check_names, run_cli
from ._core import _parse_config

__all__ = ["ConfigError", "Context", "CyclotomicAlgebra", "check_names", "run_cli", "normalize_config", "run_checks"]


def normalize_config(text):
    """Validate a JSON job configuration and return it in canonical form."""
    return json.loads(_parse_config(text))


def run_checks(ctx, lam, nmax=2, checks=("all",), jobs=1):
    """Run verification checks and return the report suite as a dict."""
    return json.loads(ctx._run_checks(lam, nmax, list(checks), jobs))
