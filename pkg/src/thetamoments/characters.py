"""Dirichlet characters mod q as exponent tuples over (Z/qZ)* generators.

A character is stored as its exponent tuple (j_1, ..., j_r) against the
generators of `GroupStructure`: chi(g_l) = exp(2 pi i j_l / d_l).  Evaluation
anywhere is integer index arithmetic followed by one root-of-unity lookup, so
character values are exact roots of unity up to one complex rounding.

Characters are enumerated in C order of their exponent tuples; index 0 is the
trivial character.  The group also provides vectorized tables (parity bits,
conductors, orders) and the fast weighted-sum transform

    transform(w)[j] = sum_a chi_j(a) w[a],

computed for all phi(q) characters at once as a multidimensional inverse FFT
over the cyclic components (a single length-(q-1) transform when q is prime).
"""

from __future__ import annotations

import math
from functools import cached_property

import numpy as np

from .errors import DomainError
from .numtheory import GroupStructure, divisors, group_structure
from .specfun import ComplexApprox

__all__ = ["Character", "CharacterGroup", "build_group", "gauss_sum"]

_EPS = np.finfo(float).eps


class CharacterGroup:
    """All Dirichlet characters mod q, with batch tables and transforms."""

    def __init__(self, q: int):
        if q < 1:
            raise DomainError("modulus must be >= 1")
        self.q = q
        self.structure: GroupStructure = group_structure(q)
        self._dims = self.structure.dims
        self._e = self.structure.exponent
        # per-component weight e/d_l turns exponent tuples into a single
        # exponent mod e: chi_j(n) = root[(m(n) . (j * w)) mod e]
        self._weights = np.array([self._e // d for d in self._dims], dtype=np.int64)
        if self._dims:
            self._m_matrix = np.stack(
                np.unravel_index(np.arange(self.phi), self._dims), axis=1
            ).astype(np.int64)
        else:
            self._m_matrix = np.zeros((self.phi, 0), dtype=np.int64)
        self._roots = np.exp(2j * np.pi * np.arange(self._e) / self._e)

    # -- basic shape -------------------------------------------------------

    @property
    def phi(self) -> int:
        return self.structure.phi

    def __len__(self) -> int:
        return self.phi

    def __iter__(self):
        for i in range(self.phi):
            yield self.char(i)

    def char(self, index: int) -> "Character":
        if not 0 <= index < self.phi:
            raise DomainError(f"character index {index} out of range 0..{self.phi - 1}")
        if self._dims:
            exps = tuple(int(x) for x in np.unravel_index(index, self._dims))
        else:
            exps = ()
        return Character(self, index, exps)

    def char_from_exponents(self, exponents: tuple[int, ...]) -> "Character":
        if len(exponents) != len(self._dims):
            raise DomainError("exponent tuple length does not match group rank")
        exps = tuple(j % d for j, d in zip(exponents, self._dims))
        index = int(np.ravel_multi_index(exps, self._dims)) if self._dims else 0
        return Character(self, index, exps)

    def conjugate_index(self, index: int) -> int:
        """Index of the complex-conjugate character."""
        if not self._dims:
            return 0
        exps = np.unravel_index(index, self._dims)
        neg = tuple((-j) % d for j, d in zip(exps, self._dims))
        return int(np.ravel_multi_index(neg, self._dims))

    # -- batch tables ------------------------------------------------------

    @cached_property
    def _jw_matrix(self) -> np.ndarray:
        """(phi x r) matrix of j_l * (e/d_l), one row per character."""
        return self._m_matrix * self._weights[None, :]

    @cached_property
    def parity_bits(self) -> np.ndarray:
        """0 for even characters (chi(-1) = 1), 1 for odd, all characters."""
        if self.q <= 2:
            return np.zeros(self.phi, dtype=np.int64)
        m_neg = np.array(self.structure.exponents_of(self.q - 1), dtype=np.int64)
        t = (self._jw_matrix @ m_neg) % self._e
        return (t != 0).astype(np.int64)

    @cached_property
    def orders(self) -> np.ndarray:
        """Multiplicative order of each character."""
        out = np.ones(self.phi, dtype=np.int64)
        for l, d in enumerate(self._dims):
            j = self._m_matrix[:, l]
            out = np.lcm(out, d // np.gcd(j, d))
        return out

    @cached_property
    def conductors(self) -> np.ndarray:
        """Conductor of each character: least f | q with chi trivial on
        the subgroup {n unit : n = 1 mod f}."""
        out = np.zeros(self.phi, dtype=np.int64)
        units = self.structure.units()
        rows = self.structure.index_of_n[units]  # flat index of each unit
        m_units = self._m_matrix[rows]           # (phi x r) rows per unit
        jw = self._jw_matrix.T                   # (r x phi)
        for f in divisors(self.q):
            undecided = out == 0
            if not undecided.any():
                break
            if f == 1:
                # trivial on the whole group <=> the trivial character
                trivial_on_sub = np.arange(self.phi) == 0
            else:
                sub = m_units[units % f == 1]    # exponent rows of {n = 1 mod f}
                if sub.size == 0 or sub.shape[1] == 0:
                    trivial_on_sub = np.ones(self.phi, dtype=bool)
                else:
                    trivial_on_sub = ~np.any((sub @ jw) % self._e, axis=0)
            out[undecided & trivial_on_sub] = f
        return out

    @cached_property
    def primitive_mask(self) -> np.ndarray:
        return self.conductors == self.q

    @cached_property
    def quadratic_or_trivial_mask(self) -> np.ndarray:
        """chi^2 = trivial character (order 1 or 2)."""
        return self.orders <= 2

    # -- evaluation and transforms ----------------------------------------

    def value_table(self, index: int) -> np.ndarray:
        """chi(a) for a = 0..q-1 (0 at non-units)."""
        if self.q == 1:
            return np.ones(1, dtype=complex)
        table = np.zeros(self.q, dtype=complex)
        jw = self._jw_matrix[index]
        t = (self._m_matrix @ jw) % self._e
        table[self.structure.n_of_index] = self._roots[t]
        return table

    def transform(self, w: np.ndarray) -> np.ndarray:
        """sum_a chi_j(a) w[a] for every character j, in index order.

        w has length q (entries at non-unit residues are ignored).  The sum is
        an inverse multidimensional DFT of w regrouped by exponent tuple.
        """
        w = np.asarray(w)
        if w.shape != (self.q,):
            raise DomainError(f"weight vector must have length q = {self.q}")
        z = w[self.structure.n_of_index]
        if not self._dims:
            return z.astype(complex).reshape(1)
        z = z.reshape(self._dims)
        return (np.fft.ifftn(z) * self.phi).reshape(-1)


def build_group(q: int) -> CharacterGroup:
    """Character group mod q (q >= 1)."""
    return CharacterGroup(q)


class Character:
    """One Dirichlet character mod q; cheap handle onto its group's tables."""

    __slots__ = ("group", "index", "exponents")

    def __init__(self, group: CharacterGroup, index: int, exponents: tuple[int, ...]):
        self.group = group
        self.index = index
        self.exponents = exponents

    @property
    def q(self) -> int:
        return self.group.q

    @property
    def is_even(self) -> bool:
        return self.group.parity_bits[self.index] == 0

    @property
    def parity(self) -> str:
        return "even" if self.is_even else "odd"

    @property
    def conductor(self) -> int:
        return int(self.group.conductors[self.index])

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.q

    @property
    def is_trivial(self) -> bool:
        return self.index == 0

    @property
    def order(self) -> int:
        return int(self.group.orders[self.index])

    def root_exponent(self, n: int) -> int | None:
        """t with chi(n) = exp(2 pi i t / e), or None when gcd(n, q) > 1."""
        g = self.group
        if g.q == 1:
            return 0
        i = int(g.structure.index_of_n[n % g.q])
        if i < 0:
            return None
        jw = g._jw_matrix[self.index]
        return int((g._m_matrix[i] @ jw) % g._e)

    def value(self, n: int) -> complex:
        t = self.root_exponent(n)
        return 0j if t is None else complex(self.group._roots[t])

    def value_table(self) -> np.ndarray:
        return self.group.value_table(self.index)

    def conjugate(self) -> "Character":
        return self.group.char(self.group.conjugate_index(self.index))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Character) and other.q == self.q
                and other.exponents == self.exponents)

    def __hash__(self) -> int:
        return hash((self.q, self.exponents))

    def __repr__(self) -> str:
        return f"Character(q={self.q}, exponents={self.exponents})"


def gauss_sum(chi: Character) -> ComplexApprox:
    """Gauss sum tau(chi) = sum_a chi(a) e^{2 pi i a / q}."""
    q = chi.q
    vals = chi.value_table()
    e = np.exp(2j * np.pi * np.arange(q) / q)
    v = complex(np.dot(vals, e))
    return ComplexApprox(v, 8 * _EPS * max(q, 1))
