from ._ctxstat import (
    Error,
    accardi_check,
    born_same_outcome,
    decide_lp,
    find_state,
    run_cli,
    two_valued_states,
    wilson_interval,
)

__all__ = [
    "Error",
    "accardi_check",
    "born_same_outcome",
    "decide_lp",
    "find_state",
    "run_cli",
    "two_valued_states",
    "wilson_interval",
]
