"""Independent reference data used by the tests.

``StatedModule`` is the F[q, v]/(q^3)-module written down for the worked
example (towers t8, t1, t2; torsion y3, y3', y4), encoded directly by its
generators and q-action rather than computed from a chain complex.
"""

from itertools import product


class StatedModule:
    def __init__(self):
        # basis elements: (name, v-power) for towers, plain names for torsion
        self.degree = {}
        for name, base in (("t8", 8), ("t1", 1), ("t2", 2)):
            for k in range(20):
                self.degree[(name, k)] = base + 4 * k
        for name, deg in (("y3", 3), ("y3'", 3), ("y4", 4)):
            self.degree[name] = deg

    def basis(self, n):
        return sorted((b for b, d in self.degree.items() if d == n), key=str)

    def q(self, b):
        if isinstance(b, tuple):
            name, k = b
            if name == "t8":
                return [("t1", k + 2)]
            if name == "t1":
                return [("t2", k)]
            if name == "t2":
                return ["y3"] if k == 0 else []
        if b == "y3'":
            return ["y4"]
        return []

    def v(self, b):
        if isinstance(b, tuple):
            return [(b[0], b[1] + 1)]
        return []

    def rank(self, word, n):
        """Rank of the composite word (applied right to left) from degree n, by brute force."""
        src = self.basis(n)
        images = set()
        for coeffs in product((0, 1), repeat=len(src)):
            vec = frozenset(b for b, c in zip(src, coeffs) if c)
            for op in reversed(word):
                out = set()
                for b in vec:
                    for t in getattr(self, op)(b):
                        out ^= {t}
                vec = frozenset(out)
            images.add(vec)
        return len(images).bit_length() - 1

    def torsion_dim(self, n):
        return sum(1 for b in self.basis(n) if not isinstance(b, tuple))


def brute_kernel(rows, cols, entries):
    """All x in F2^cols with M x = 0, by enumeration."""
    out = []
    for x in range(1 << cols):
        ok = True
        for i in range(rows):
            acc = 0
            for j in range(cols):
                acc ^= entries[i][j] & (x >> j) & 1
            if acc:
                ok = False
                break
        if ok:
            out.append(x)
    return out
