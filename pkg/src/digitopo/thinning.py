"""Breadth-first homotopic thinning, written once for every image kind."""

from collections import deque


def no_constraint():
    """Predicate accepting every site."""
    return _accept_all


def _accept_all(p):
    return True


def preserve_set(keep):
    """Adapter turning a set of protected sites into a removal predicate."""
    keep = frozenset(keep)

    def constraint(p):
        return p not in keep

    return constraint


def breadth_first_thinning(input, nbh, is_simple, detach, constraint=None):
    """Iteratively detach simple sites of ``input`` until stability.

    ``is_simple(p, X)`` and ``detach(p, X)`` act on the working copy ``X``;
    ``constraint(p)`` must hold for ``p`` to be removed. Sites are visited in
    domain order first, then in FIFO order: every time a site is detached,
    its neighbors still in the object are queued (at most once at a time).
    A detached site that is still in the object afterwards, as happens when
    a gray level is merely lowered, is queued again too.

    The input is left untouched; the thinned copy is returned.
    """
    if constraint is None:
        constraint = _accept_all
    output = input.copy()
    in_queue = output.flags()
    queue = deque()
    get = output.get

    for p in output.domain():
        if get(p) and constraint(p) and is_simple(p, output):
            queue.append(p)
            in_queue[p] = True

    while queue:
        p = queue.popleft()
        in_queue[p] = False
        if get(p) and constraint(p) and is_simple(p, output):
            detach(p, output)
            for n in nbh.sites(p):
                if get(n) and not in_queue[n]:
                    queue.append(n)
                    in_queue[n] = True
            if get(p) and not in_queue[p]:
                queue.append(p)
                in_queue[p] = True
    return output


def unstable_sites(image, is_simple, constraint=None):
    """Sites of ``image`` that could still be removed; empty when stable."""
    if constraint is None:
        constraint = _accept_all
    return [
        p for p in image.domain() if image.get(p) and constraint(p) and is_simple(p, image)
    ]
