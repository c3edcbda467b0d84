"""Random identity-language trees in the normal form the parser produces."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from qcfrac.cfrac import NAMES
from qcfrac.dsl import BinOp, Const, Monomial, NamedCF, Neg, Poch, Pow, Special, Theta

SPECIALS = ("phi", "psi", "chi", "fneg")


def _wrap_neg(x):
    # the parser folds a leading minus into literals
    if isinstance(x, Monomial):
        return Monomial(-x.sign, x.exp)
    if isinstance(x, Const):
        return Const(-x.value)
    return Neg(x)


def random_monomial(rng):
    exp = Fraction(rng.randint(-12, 30), rng.choice([1, 1, 2, 4, 3]))
    return Monomial(rng.choice([1, -1]), exp)


def random_ast(rng, depth=4):
    if depth <= 0 or rng.random() < 0.25:
        kind = rng.randrange(6)
        if kind == 0:
            return Const(rng.randint(-5, 30))
        if kind == 1:
            return random_monomial(rng)
        if kind == 2:
            return Theta(random_monomial(rng), random_monomial(rng))
        if kind == 3:
            return Special(rng.choice(SPECIALS), random_monomial(rng))
        if kind == 4:
            args = tuple(random_monomial(rng) for _ in range(rng.randint(1, 3)))
            return Poch(args, random_monomial(rng))
        return NamedCF(rng.choice(NAMES), random_monomial(rng), rng.choice(["product", "cf"]))
    kind = rng.randrange(3)
    if kind == 0:
        return BinOp(rng.choice("+-*/"), random_ast(rng, depth - 1), random_ast(rng, depth - 1))
    if kind == 1:
        return Pow(random_ast(rng, depth - 1), rng.randint(-4, 6))
    return _wrap_neg(random_ast(rng, depth - 1))


fracs = st.builds(Fraction, st.integers(-12, 30), st.sampled_from([1, 2, 3, 4]))
monomials = st.builds(Monomial, st.sampled_from([1, -1]), fracs)
leaves = st.one_of(
    st.builds(Const, st.integers(-5, 50)),
    monomials,
    st.builds(Theta, monomials, monomials),
    st.builds(Special, st.sampled_from(SPECIALS), monomials),
    st.builds(Poch, st.lists(monomials, min_size=1, max_size=3).map(tuple), monomials),
    st.builds(NamedCF, st.sampled_from(NAMES), monomials, st.sampled_from(["product", "cf"])),
)


def _extend(children):
    return st.one_of(
        st.builds(BinOp, st.sampled_from("+-*/"), children, children),
        st.builds(Pow, children, st.integers(-4, 6)),
        children.map(_wrap_neg),
    )


asts = st.recursive(leaves, _extend, max_leaves=12)


def seeded_asts(n, seed=20261019):
    rng = random.Random(seed)
    return [random_ast(rng) for _ in range(n)]
