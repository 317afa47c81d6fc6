"""Shared random-AST generator for the DSL round-trip property tests."""

from qpartitions.dsl import Add, Div, IntLit, Mul, Neg, Poch, Pow, Q, Qbin, Sub
from qpartitions.qobjects import Monomial

ATOM_MAKERS = [
    lambda rng: IntLit(rng.randint(0, 9)),
    lambda rng: Q(),
    lambda rng: Poch(rand_mono(rng), rng.randint(1, 3),
                     rng.choice((None, 0, 1, 2, 3))),
    lambda rng: Qbin(rng.randint(0, 6), rng.randint(-1, 7)),
]


def rand_mono(rng):
    if rng.random() < 0.15:
        return Monomial.zero()
    return Monomial(rng.choice((1, -1, 2, -3)), rng.randint(1, 4))


def rand_ast(rng, depth):
    if depth <= 0:
        return rng.choice(ATOM_MAKERS)(rng)
    kind = rng.randrange(7)
    if kind == 0:
        return Add(rand_ast(rng, depth - 1), rand_ast(rng, depth - 1))
    if kind == 1:
        return Sub(rand_ast(rng, depth - 1), rand_ast(rng, depth - 1))
    if kind == 2:
        return Mul(rand_ast(rng, depth - 1), rand_ast(rng, depth - 1))
    if kind == 3:
        return Div(rand_ast(rng, depth - 1), rand_ast(rng, depth - 1))
    if kind == 4:
        return Neg(rand_ast(rng, depth - 1))
    if kind == 5:
        return Pow(rand_ast(rng, depth - 1), rng.randint(-3, 3))
    return rng.choice(ATOM_MAKERS)(rng)
