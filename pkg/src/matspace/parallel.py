"""Order-preserving parallel search for the first failing chunk."""

from concurrent.futures import ProcessPoolExecutor


def first_hit(func, chunks, jobs=1):
    """Return the first non-None ``func(chunk)`` in chunk order.

    With ``jobs > 1`` chunks are evaluated in worker processes, but the merge
    still follows chunk order, so the answer never depends on scheduling.
    """
    chunks = list(chunks)
    if jobs <= 1 or len(chunks) <= 1:
        for c in chunks:
            r = func(c)
            if r is not None:
                return r
        return None
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        for r in ex.map(func, chunks):
            if r is not None:
                return r
    return None


def split_range(size, parts):
    parts = max(1, min(parts, size)) if size else 1
    step, extra = divmod(size, parts)
    out, start = [], 0
    for k in range(parts):
        stop = start + step + (1 if k < extra else 0)
        out.append((start, stop))
        start = stop
    return out
