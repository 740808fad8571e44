"""Independent reference computations used to check the library.

Nothing here calls the library's linear algebra: sympy handles the exact
rank computations and quivers are plain tuples.
"""

import itertools

import sympy


def positive_roots(vertices, arrows, box=4):
    """Positive roots of the Tits form q(x) = sum x_i^2 - sum_{arrows} x_s x_t (brute force)."""
    idx = {v: k for k, v in enumerate(vertices)}
    roots = []
    for x in itertools.product(range(box + 1), repeat=len(vertices)):
        if not any(x):
            continue
        q = sum(c * c for c in x) - sum(x[idx[s]] * x[idx[t]] for s, t in arrows)
        if q == 1:
            roots.append(x)
    return sorted(roots)


def count_paths(vertices, arrows, max_len):
    """Number of paths of length <= max_len, by walking the quiver."""
    out = {v: [] for v in vertices}
    for s, t in arrows:
        out[s].append(t)
    total = len(vertices)
    layer = list(vertices)
    for _ in range(max_len):
        layer = [t for v in layer for t in out[v]]
        total += len(layer)
    return total


def hom_dim(source_dims, source_maps, target_dims, target_maps, arrows):
    """dim Hom via a Kronecker-product linear system solved with sympy.

    ``arrows`` is a list of (name, s, t); maps are lists of rows.
    """
    verts = sorted(set(source_dims) | set(target_dims))
    blocks = []
    offsets = {}
    n = 0
    for v in verts:
        offsets[v] = n
        n += source_dims.get(v, 0) * target_dims.get(v, 0)
    if n == 0:
        return 0
    rows = []
    for name, s, t in arrows:
        ms, mt = source_dims.get(s, 0), source_dims.get(t, 0)
        ns, nt = target_dims.get(s, 0), target_dims.get(t, 0)
        if ms * nt == 0:
            continue
        a = sympy.Matrix(mt, ms, lambda i, j: sympy.Rational(str(source_maps[name][i][j])) if mt and ms else 0)
        b = sympy.Matrix(nt, ns, lambda i, j: sympy.Rational(str(target_maps[name][i][j])) if nt and ns else 0)
        # vec(F_t A) = (A^T kron I) vec(F_t); vec(B F_s) = (I kron B) vec(F_s)   (column-major vec)
        left = sympy.kronecker_product(a.T, sympy.eye(nt)) if mt else sympy.zeros(ms * nt, 0)
        right = sympy.kronecker_product(sympy.eye(ms), b) if ns else sympy.zeros(ms * nt, 0)
        block = sympy.zeros(ms * nt, n)
        # unknown layout per vertex is column-major here; the dimension count does not depend on it
        if mt:
            block[:, offsets[t]:offsets[t] + mt * nt] = left
        if ns:
            block[:, offsets[s]:offsets[s] + ms * ns] -= right
        rows.append(block)
    if not rows:
        return n
    big = sympy.Matrix.vstack(*rows)
    return n - big.rank()


def catalan(n):
    return sympy.catalan(n)
