"""Generalized circular shifts and the sliding-tile puzzle built on them."""

import json

from ._core import (
    DEFAULT_NYQUIST_SIGN,
    ApiError,
    Board,
    GameError,
    _GameService,
    apply_block_program,
    apply_program,
    col_shift,
    dense_oracle,
    frequencies,
    gcs,
    integer_cshift,
    invert_history,
    invert_program,
    new_board,
    row_shift,
    scramble,
    shift_matrix,
    verify,
)

__all__ = [
    "DEFAULT_NYQUIST_SIGN",
    "ApiError",
    "Board",
    "GameError",
    "GameService",
    "apply_block_program",
    "apply_program",
    "col_shift",
    "dense_oracle",
    "frequencies",
    "gcs",
    "integer_cshift",
    "invert_history",
    "invert_program",
    "new_board",
    "row_shift",
    "scramble",
    "shift_matrix",
    "verify",
]


class GameService:
    """Dict-in, dict-out wrapper over the JSON session service."""

    def __init__(self, snapshot=None, id_seed=None, nyquist_sign=DEFAULT_NYQUIST_SIGN):
        self._svc = _GameService(snapshot, id_seed, nyquist_sign)

    def create_session(self, request):
        return json.loads(self._svc.create_session(json.dumps(request)))

    def post_move(self, session_id, move):
        return json.loads(self._svc.post_move(session_id, json.dumps(move)))

    def post_undo(self, session_id):
        return json.loads(self._svc.post_undo(session_id))

    def get_state(self, session_id):
        return json.loads(self._svc.get_state(session_id))

    def get_render(self, session_id):
        return json.loads(self._svc.get_render(session_id))
