from concurrent.futures import ProcessPoolExecutor


def pmap(fn, items, jobs: int = 1, chunksize: int = 256) -> list:
    """Order-preserving map; fans out to worker processes when ``jobs > 1``."""
    items = list(items)
    if jobs <= 1 or len(items) < 2 * chunksize:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=chunksize))
