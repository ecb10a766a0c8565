"""The Taft Hopf algebra H(q) of dimension n^4 and its distinguished subalgebra.

H(q) is generated by a grouplike g and a skew-primitive x subject to

    x^(n^2) = 0,   g^(n^2) = 1,   g x = q x g,

where q is a primitive root of unity of order n^2.  The subalgebra A is
generated by a = g^n and x and has dimension n^3.

Two coordinate systems are kept for H: the monomial basis {g^i x^j} and the
idempotent basis {1_z x^j}, where the 1_z are the primitive idempotents of
the group algebra of <g> fixed by g 1_z = q^z 1_z.  Products of idempotent
-basis monomials are single basis elements, so all twist machinery runs
there; the monomial basis is the reporting and membership surface.  The
same pair of coordinates exists for A with the aggregated idempotents
1_s = sum_i 1_{s+ni}, on which a acts by Q^s with Q = q^n.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .algebra import AlgebraDescriptor, Tensor
from .cyclotomic import Cyclotomic, one as cy_one, root_of_unity, zero as cy_zero

__all__ = ["TaftAlgebra"]


class TaftAlgebra:
    """H(q) with q = zeta_{n^2}^e, plus the subalgebra A = <g^n, x>."""

    def __init__(self, n: int, exponent: int = 1):
        if n < 2:
            raise ValueError(f"need n >= 2, got {n}")
        m = n * n
        exponent %= m
        if gcd(exponent, m) != 1:
            raise ValueError(f"q = zeta_{m}^{exponent} is not primitive of order {m}")
        self.n = n
        self.m = m
        self.exponent = exponent
        self.q = root_of_unity(m, exponent)
        self.Q = self.q**n

        self._q_pows = [root_of_unity(m, (exponent * k) % m) for k in range(m)]
        self._inv_m = Fraction(1, m)
        self._inv_n = Fraction(1, n)

        self.H = self._monomial_descriptor()
        self.H_idem = self._idempotent_descriptor()
        self.A = self._sub_monomial_descriptor()
        self.A_bold = self._sub_idempotent_descriptor()

        # indices of A-basis monomials inside H (g-exponent divisible by n)
        self.a_indices_in_h = frozenset(
            (n * i) * m + j for i in range(n) for j in range(m)
        )

        self._delta_memo: dict[int, Tensor] = {}
        self._dg_pows = [self.H.unit_tensor(2)]
        self._dx_pows = [self.H.unit_tensor(2)]
        self._sg_pows = [self.H.unit_tensor(1)]
        self._sx_pows = [self.H.unit_tensor(1)]
        self._antipode_memo: dict[int, Tensor] = {}
        self._antipode_idem_memo: dict[int, Tensor] = {}
        self._epsilon_idem_memo: dict[int, Cyclotomic] = {}

    # -- scalars ------------------------------------------------------------

    def q_power(self, k: int) -> Cyclotomic:
        """q**k, exactly."""
        return self._q_pows[k % self.m]

    def Q_power(self, k: int) -> Cyclotomic:
        return self._q_pows[(self.n * k) % self.m]

    # -- descriptors ----------------------------------------------------------

    def _monomial_descriptor(self) -> AlgebraDescriptor:
        n, m = self.n, self.m

        def label(idx: int) -> str:
            i, j = divmod(idx, m)
            parts = []
            if i:
                parts.append("g" if i == 1 else f"g^{i}")
            if j:
                parts.append("x" if j == 1 else f"x^{j}")
            return " ".join(parts) if parts else "1"

        def mult(a: int, b: int) -> dict:
            i, j = divmod(a, m)
            k, l = divmod(b, m)
            if j + l >= m:
                return {}
            return {((i + k) % m) * m + (j + l): self._q_pows[(-j * k) % m]}

        return AlgebraDescriptor(
            name=f"H({n},{self.exponent})",
            dim=m * m,
            label=label,
            mult=mult,
            unit={0: cy_one()},
        )

    def _idempotent_descriptor(self) -> AlgebraDescriptor:
        n, m = self.n, self.m

        def label(idx: int) -> str:
            z, j = divmod(idx, m)
            if j == 0:
                return f"1_{z}"
            return f"1_{z} x" if j == 1 else f"1_{z} x^{j}"

        one = cy_one()

        def mult(a: int, b: int) -> dict:
            z, j = divmod(a, m)
            w, l = divmod(b, m)
            if j + l >= m or w != (z - j) % m:
                return {}
            return {z * m + (j + l): one}

        return AlgebraDescriptor(
            name=f"H({n},{self.exponent})|idem",
            dim=m * m,
            label=label,
            mult=mult,
            unit={z * m: one for z in range(m)},
            join_left=lambda idx: (idx // m - idx % m) % m,
            join_right=lambda idx: idx // m,
            diag_indices=frozenset(z * m for z in range(m)),
        )

    def _sub_monomial_descriptor(self) -> AlgebraDescriptor:
        n, m = self.n, self.m

        def label(idx: int) -> str:
            i, j = divmod(idx, m)
            parts = []
            if i:
                parts.append("a" if i == 1 else f"a^{i}")
            if j:
                parts.append("x" if j == 1 else f"x^{j}")
            return " ".join(parts) if parts else "1"

        def mult(a: int, b: int) -> dict:
            i, j = divmod(a, m)
            k, l = divmod(b, m)
            if j + l >= m:
                return {}
            return {((i + k) % n) * m + (j + l): self._q_pows[(-j * k * n) % m]}

        return AlgebraDescriptor(
            name=f"A({n},{self.exponent})",
            dim=n * m,
            label=label,
            mult=mult,
            unit={0: cy_one()},
        )

    def _sub_idempotent_descriptor(self) -> AlgebraDescriptor:
        n, m = self.n, self.m

        def label(idx: int) -> str:
            s, j = divmod(idx, m)
            if j == 0:
                return f"1_{s}"
            return f"1_{s} x" if j == 1 else f"1_{s} x^{j}"

        one = cy_one()

        def mult(a: int, b: int) -> dict:
            s, j = divmod(a, m)
            t, l = divmod(b, m)
            if j + l >= m or t != (s - j) % n:
                return {}
            return {s * m + (j + l): one}

        return AlgebraDescriptor(
            name=f"A({n},{self.exponent})|bold",
            dim=n * m,
            label=label,
            mult=mult,
            unit={s * m: one for s in range(n)},
            join_left=lambda idx: (idx // m - idx % m) % n,
            join_right=lambda idx: idx // m,
            diag_indices=frozenset(s * m for s in range(n)),
        )

    # -- distinguished elements -------------------------------------------------

    def monomial(self, i: int, j: int, coeff=1) -> Tensor:
        """g^i x^j as a rank-1 element of H."""
        return self.H.basis_tensor(((i % self.m) * self.m + j,), coeff)

    @property
    def g(self) -> Tensor:
        return self.monomial(1, 0)

    @property
    def x(self) -> Tensor:
        return self.monomial(0, 1)

    @property
    def a(self) -> Tensor:
        return self.monomial(self.n, 0)

    @property
    def unit(self) -> Tensor:
        return self.H.unit_tensor(1)

    def sub_monomial(self, i: int, j: int, coeff=1) -> Tensor:
        """a^i x^j as a rank-1 element of A."""
        return self.A.basis_tensor(((i % self.n) * self.m + j,), coeff)

    def idempotent(self, z: int) -> Tensor:
        """1_z = (1/n^2) sum_t q^(-z t) g^t, satisfying g 1_z = q^z 1_z."""
        z %= self.m
        terms = {
            (t * self.m,): self._q_pows[(-z * t) % self.m] * self._inv_m
            for t in range(self.m)
        }
        return Tensor(self.H, 1, terms)

    def bold_idempotent(self, s: int) -> Tensor:
        """Aggregated idempotent sum_i 1_{s+ni}; lies in the span of a-powers."""
        acc = Tensor(self.H, 1, {})
        for i in range(self.n):
            acc = acc + self.idempotent(s % self.n + self.n * i)
        return acc

    # -- Hopf structure maps  ---------------------------------------------------

    def delta_basis(self, idx: int) -> Tensor:
        """Coproduct of a basis monomial, as (g(x)g)^i (x(x)g + 1(x)x)^j.

        Powers are computed by tensor-square multiplication; no closed
        q-binomial formula enters the construction.
        """
        hit = self._delta_memo.get(idx)
        if hit is not None:
            return hit
        i, j = divmod(idx, self.m)
        dg = Tensor(self.H, 2, {(self.m, self.m): cy_one()})
        dx = Tensor(self.H, 2, {(1, self.m): cy_one(), (0, 1): cy_one()})
        while len(self._dg_pows) <= i:
            self._dg_pows.append(self._dg_pows[-1] * dg)
        while len(self._dx_pows) <= j:
            self._dx_pows.append(self._dx_pows[-1] * dx)
        out = self._dg_pows[i] * self._dx_pows[j]
        self._delta_memo[idx] = out
        return out

    def delta(self, u: Tensor) -> Tensor:
        """Linear extension of the coproduct to any rank-1 element of H."""
        acc = Tensor(self.H, 2, {})
        for (idx,), c in u.terms.items():
            acc = acc + self.delta_basis(idx).scale(c)
        return acc

    def epsilon_basis(self, idx: int) -> Cyclotomic:
        return cy_one() if idx % self.m == 0 else cy_zero()

    def epsilon(self, u: Tensor) -> Cyclotomic:
        acc = cy_zero()
        for (idx,), c in u.terms.items():
            if idx % self.m == 0:
                acc = acc + c
        return acc

    def antipode_basis(self, idx: int) -> Tensor:
        """S(g^i x^j) = S(x)^j S(g)^i with S(g) = g^(-1), S(x) = -x g^(-1)."""
        hit = self._antipode_memo.get(idx)
        if hit is not None:
            return hit
        i, j = divmod(idx, self.m)
        sg = self.monomial(-1, 0)
        sx = (self.x * self.monomial(-1, 0)).scale(-1)
        while len(self._sg_pows) <= i:
            self._sg_pows.append(self._sg_pows[-1] * sg)
        while len(self._sx_pows) <= j:
            self._sx_pows.append(self._sx_pows[-1] * sx)
        out = self._sx_pows[j] * self._sg_pows[i]
        self._antipode_memo[idx] = out
        return out

    def antipode(self, u: Tensor) -> Tensor:
        acc = Tensor(self.H, 1, {})
        for (idx,), c in u.terms.items():
            acc = acc + self.antipode_basis(idx).scale(c)
        return acc

    # -- change of coordinates ---------------------------------------------------

    def _mon_to_idem_slot(self, idx: int):
        i, j = divmod(idx, self.m)
        return [
            (z * self.m + j, self._q_pows[(i * z) % self.m]) for z in range(self.m)
        ]

    def _idem_to_mon_slot(self, idx: int):
        # integer coefficients; the 1/n^2 normalization per slot is applied
        # once at the end of from_idem, keeping the accumulation integral
        z, j = divmod(idx, self.m)
        return [
            (t * self.m + j, self._q_pows[(-z * t) % self.m]) for t in range(self.m)
        ]

    def to_idem(self, u: Tensor) -> Tensor:
        return _convert(u, self.H_idem, self._mon_to_idem_slot)

    def from_idem(self, u: Tensor) -> Tensor:
        out = _convert(u, self.H, self._idem_to_mon_slot)
        return out.scale(Fraction(1, self.m**u.rank))

    def _sub_mon_to_bold_slot(self, idx: int):
        i, j = divmod(idx, self.m)
        return [(s * self.m + j, self.Q_power(i * s)) for s in range(self.n)]

    def _sub_bold_to_mon_slot(self, idx: int):
        s, j = divmod(idx, self.m)
        return [(i * self.m + j, self.Q_power(-s * i)) for i in range(self.n)]

    def sub_to_bold(self, u: Tensor) -> Tensor:
        return _convert(u, self.A_bold, self._sub_mon_to_bold_slot)

    def sub_from_bold(self, u: Tensor) -> Tensor:
        out = _convert(u, self.A, self._sub_bold_to_mon_slot)
        return out.scale(Fraction(1, self.n**u.rank))

    def embed_sub(self, u: Tensor) -> Tensor:
        """Inclusion A -> H on monomial coordinates (a = g^n)."""
        return _convert(
            u,
            self.H,
            lambda idx: [((idx // self.m) * self.n * self.m + idx % self.m, cy_one())],
        )

    def project_to_sub(self, u: Tensor) -> Tensor:
        """Rewrite an H-element supported on A-monomials in A coordinates."""
        if not u.in_span(self.a_indices_in_h):
            bad = next(k for k in u.terms if any(i not in self.a_indices_in_h for i in k))
            raise ValueError(f"element leaves the subalgebra at {bad}")
        n, m = self.n, self.m

        def slot(idx: int):
            t, j = divmod(idx, m)
            return [((t // n) * m + j, cy_one())]

        return _convert(u, self.A, slot)

    # -- idempotent-basis structure maps ------------------------------------------

    def delta_idem_basis(self, idx: int) -> Tensor:
        """Coproduct of 1_z in idempotent coordinates: sum over u + v = z.

        This is the transport of Delta(g^t) = g^t (x) g^t through the
        idempotent change of basis; tests compare it against the structural
        computation.  Only group-algebra indices (x-degree 0) are supported.
        """
        z, j = divmod(idx, self.m)
        if j:
            raise ValueError("idempotent coproduct table only covers x-degree 0")
        one = cy_one()
        return Tensor(
            self.H_idem,
            2,
            {
                (u * self.m, ((z - u) % self.m) * self.m): one
                for u in range(self.m)
            },
        )

    def epsilon_idem_basis(self, idx: int) -> Cyclotomic:
        """Counit on the idempotent basis, evaluated through monomial coordinates."""
        hit = self._epsilon_idem_memo.get(idx)
        if hit is None:
            hit = self.epsilon(self.from_idem(self.H_idem.basis_tensor((idx,))))
            self._epsilon_idem_memo[idx] = hit
        return hit

    def antipode_idem_basis(self, idx: int) -> Tensor:
        """Antipode on the idempotent basis, evaluated through monomial coordinates."""
        hit = self._antipode_idem_memo.get(idx)
        if hit is None:
            mono = self.from_idem(self.H_idem.basis_tensor((idx,)))
            hit = self.to_idem(self.antipode(mono))
            self._antipode_idem_memo[idx] = hit
        return hit


def _convert(u: Tensor, target: AlgebraDescriptor, slot_map) -> Tensor:
    cur = u.terms
    for p in range(u.rank):
        nxt: dict = {}
        for key, c in cur.items():
            for ni, cc in slot_map(key[p]):
                nk = key[:p] + (ni,) + key[p + 1 :]
                prev = nxt.get(nk)
                nxt[nk] = c * cc if prev is None else prev + c * cc
        cur = nxt
    return Tensor(target, u.rank, cur)
