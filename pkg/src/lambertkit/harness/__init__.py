"""Expression DSL, identity catalog, verification engine, reports and CLI."""
from .dsl import ParseError, evaluate, parse, pretty
from .catalog import IdentityRecord, load_catalog, parse_catalog
from .verify import RecordResult, VerificationReport, verify, verify_all

__all__ = [
    "ParseError",
    "parse",
    "pretty",
    "evaluate",
    "IdentityRecord",
    "parse_catalog",
    "load_catalog",
    "RecordResult",
    "VerificationReport",
    "verify",
    "verify_all",
]
