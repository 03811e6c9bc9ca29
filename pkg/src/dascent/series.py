"""Integer polynomials in (t, u, v), truncated in t."""

MAX_ORDER = 12


class TruncatedSeries:
    """Sparse map ``(i, j, l) -> c`` for the monomial ``c t^i u^j v^l``.

    Terms with t-degree above ``order`` are dropped on construction, so every
    operation below stays truncated.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=None):
        if not 0 <= order <= MAX_ORDER:
            raise ValueError(f"order must lie in [0, {MAX_ORDER}]")
        self.order = order
        self.coeffs = {}
        for key, c in (coeffs or {}).items():
            key = tuple(key) + (0,) * (3 - len(key))
            if c and key[0] <= order:
                self.coeffs[key] = self.coeffs.get(key, 0) + c
        self.coeffs = {k: c for k, c in self.coeffs.items() if c}

    @classmethod
    def monomial(cls, order, t=0, u=0, v=0, coeff=1):
        return cls(order, {(t, u, v): coeff})

    @classmethod
    def constant(cls, order, c):
        return cls(order, {(0, 0, 0): c})

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, int):
            return TruncatedSeries.constant(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return TruncatedSeries(min(self.order, other.order), out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        out = {}
        for (i1, j1, l1), c1 in self.coeffs.items():
            for (i2, j2, l2), c2 in other.coeffs.items():
                if i1 + i2 > order:
                    continue
                key = (i1 + i2, j1 + j2, l1 + l2)
                out[key] = out.get(key, 0) + c1 * c2
        return TruncatedSeries(order, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = TruncatedSeries.constant(self.order, 1)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries({self.order}, {dict(sorted(self.coeffs.items()))})"

    def coeff(self, t=0, u=0, v=0):
        return self.coeffs.get((t, u, v), 0)

    def t_coeff(self, i):
        """Total coefficient of t^i with u = v = 1."""
        return sum(c for (a, _, _), c in self.coeffs.items() if a == i)

    def at_v1(self):
        """Substitute v := 1."""
        out = {}
        for (i, j, _), c in self.coeffs.items():
            out[(i, j, 0)] = out.get((i, j, 0), 0) + c
        return TruncatedSeries(self.order, out)

    def u_to_uv(self):
        """Substitute u := u v."""
        return TruncatedSeries(
            self.order, {(i, j, l + j): c for (i, j, l), c in self.coeffs.items()})

    def difference(self, other):
        """Monomials where the two series disagree: (monomial, mine, theirs)."""
        keys = sorted(set(self.coeffs) | set(other.coeffs))
        return [(k, self.coeffs.get(k, 0), other.coeffs.get(k, 0))
                for k in keys if self.coeffs.get(k, 0) != other.coeffs.get(k, 0)]
