from typing import Iterable, Union

import numpy as np
from Crypto.Hash import BLAKE2b

DIGEST_BITS = 128


def table_digest(parts: Iterable[Union[np.ndarray, bytes, str, int]]) -> str:
    """
    Hex digest over an ordered sequence of tables and scalars. Tables are hashed with their shape, so
    two structures share a digest only when they are table-identical.
    """
    h = BLAKE2b.new(digest_bits=DIGEST_BITS)

    for part in parts:
        if isinstance(part, np.ndarray):
            h.update(str(part.shape).encode())
            h.update(np.ascontiguousarray(part, dtype=np.int64).tobytes())
        elif isinstance(part, bytes):
            h.update(part)
        else:
            h.update(str(part).encode())

        h.update(b'|')

    return h.hexdigest()
