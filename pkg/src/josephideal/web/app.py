"""FastAPI application serving verification results as JSON."""

from functools import lru_cache
from typing import List

from fastapi import FastAPI, HTTPException, Query

from .. import __version__
from ..config import config
from ..exceptions import ConfigError, JosephError
from ..models import SuiteConfig
from ..services import derive_lambda_c, list_suites, run_suite
from ..services.suites import SUITES

app = FastAPI(title="Joseph Ideal Verifier", version=__version__)


@lru_cache(maxsize=32)
def _lambda_c(m: int, n: int) -> dict:
    return derive_lambda_c(m, n).to_dict()


def _parse_case(text: str):
    try:
        m, n = (int(part) for part in text.split(","))
    except ValueError:
        raise HTTPException(status_code=400, detail=f"case must be m,n, got {text!r}")
    return m, n


@app.get("/health")
async def health_check():
    """Health check endpoint for deployment monitoring."""
    return {
        "status": "healthy",
        "version": __version__,
        "suites": len(SUITES),
    }


@app.get("/api/suites")
async def api_suites():
    """List the verification suites.

    Returns:
        Suite names, descriptions and case requirements
    """
    return list_suites()


@app.get("/api/lambda-c/{m}/{n}")
def api_lambda_c(m: int, n: int):
    """Derive λᶜ for sl(m|n) from the two reductions of S.

    Args:
        m: Even dimension
        n: Odd dimension

    Returns:
        The derivation summary with λᶜ as "p/q"
    """
    try:
        return _lambda_c(m, n)
    except JosephError as e:
        raise HTTPException(status_code=400, detail=str(e))


@app.get("/api/report")
def api_report(
        case: List[str] = Query(...),
        suite: List[str] = Query(["prelim"]),
):
    """Run suites and return the report document.

    Query Parameters:
        case: One or more cases as m,n
        suite: Suites to run (beta3 is not available here)

    Returns:
        Report dictionary in the CLI's JSON schema
    """
    if "beta3" in suite:
        raise HTTPException(status_code=400, detail="beta3 is only available from the CLI")
    cfg = SuiteConfig(
        cases=[_parse_case(c) for c in case],
        suites=suite,
        seed=config.seed,
    )
    try:
        doc = run_suite(cfg)
    except ConfigError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return doc.to_dict()


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host="0.0.0.0", port=8000)
