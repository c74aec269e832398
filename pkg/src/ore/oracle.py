"""Naive rewriting to PBW normal form.

Words in the generators are reduced with the local rules

    x y    -> y x + lambda
    g_i y  -> y g_i + xi_i x g_i
    g_i x  -> x g_i
    g_j g_i -> g_i g_j          (i < j)
    g_i^p  -> 1

until every word reads y...y x...x g_1...g_1 ... g_r...g_r. The rewriter
shares nothing with h_mul and serves as its reference.
"""

from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import galois
import numpy as np

from ..scalars.field import scalar
from ..utils.errors import ParseError, ResourceBoundError
from .context import AlgebraContext
from .element import HElement
from .product import h_mul

# Tokens: "y", "x", or an int i >= 1 standing for g_i
Token = Union[str, int]
Word = Tuple[Token, ...]
Symbol = Union[str, Tuple[str, int], int, galois.FieldArray]


def _lambda_words(ctx: AlgebraContext) -> List[Tuple[galois.FieldArray, Word]]:
    words = []
    for index in np.nonzero(ctx.lam)[0]:
        exps = ctx.ga.exps[int(index)]
        word: Word = tuple(i + 1 for i in range(ctx.r) for _ in range(int(exps[i])))
        words.append((ctx.lam[int(index)], word))
    return words


def _reduce_once(ctx: AlgebraContext, word: Word, lam_words: List[Tuple[galois.FieldArray, Word]]) -> Optional[List[Tuple[galois.FieldArray, Word]]]:
    one = ctx.F(1)
    for k in range(len(word) - 1):
        a, b = word[k], word[k + 1]
        head, tail = word[:k], word[k + 2:]
        if a == "x" and b == "y":
            out = [(one, head + ("y", "x") + tail)]
            out.extend((c, head + w + tail) for c, w in lam_words)
            return out
        if isinstance(a, int) and b == "y":
            return [
                (one, head + ("y", a) + tail),
                (ctx.ga.xis[a - 1], head + ("x", a) + tail),
            ]
        if isinstance(a, int) and b == "x":
            return [(one, head + ("x", a) + tail)]
        if isinstance(a, int) and isinstance(b, int) and a > b:
            return [(one, head + (b, a) + tail)]

    p = ctx.p
    run = 1
    for k in range(1, len(word)):
        if isinstance(word[k], int) and word[k] == word[k - 1]:
            run += 1
            if run == p:
                return [(one, word[: k - p + 1] + word[k + 1:])]
        else:
            run = 1
    return None


def _normal_to_index(ctx: AlgebraContext, word: Word) -> Tuple[int, int, int]:
    j = sum(1 for t in word if t == "y")
    i = sum(1 for t in word if t == "x")
    exps = [0] * ctx.r
    for t in word:
        if isinstance(t, int):
            exps[t - 1] += 1
    return j, i, ctx.ga.index(exps)


def _tokenize(ctx: AlgebraContext, word: Sequence[Symbol]) -> Tuple[galois.FieldArray, Word]:
    coeff = ctx.F(1)
    tokens: List[Token] = []
    for position, symbol in enumerate(word):
        if isinstance(symbol, galois.FieldArray):
            coeff = coeff * symbol
        elif isinstance(symbol, (int, np.integer)) and not isinstance(symbol, bool):
            coeff = coeff * scalar(ctx.F, int(symbol))
        elif symbol in ("x", "y"):
            tokens.append(str(symbol))
        elif symbol == "g" and ctx.r == 1:
            tokens.append(1)
        elif isinstance(symbol, tuple) and len(symbol) == 2 and symbol[0] == "g":
            tokens.append(_generator_index(ctx, int(symbol[1]), position))
        elif isinstance(symbol, str) and symbol.startswith("g") and symbol[1:].isdigit():
            tokens.append(_generator_index(ctx, int(symbol[1:]), position))
        else:
            raise ParseError(f"unknown generator {symbol!r}", position)
    return coeff, tuple(tokens)


def _generator_index(ctx: AlgebraContext, i: int, position: int) -> int:
    if not 1 <= i <= ctx.r:
        raise ParseError(f"generator index {i} outside 1..{ctx.r}", position)
    return i


def oracle_normal_form(word: Sequence[Symbol], ctx: AlgebraContext, bound: Optional[int] = None) -> HElement:
    """Rewrite a word in x, y, g_i and scalars to PBW normal form.

    Args:
        word: Sequence of ``"x"``, ``"y"``, ``"g"``/``"g<i>"``/``("g", i)`` and scalars
        ctx: Algebra context
        bound: Maximum word length (defaults to the configured word bound)

    Raises:
        ResourceBoundError: If the word is longer than the bound
        ParseError: On unknown generators
    """
    bound = bound if bound is not None else ctx.config.word_bound
    if len(word) > bound:
        raise ResourceBoundError(f"word length {len(word)} exceeds the bound {bound}", code="word_bound")

    coeff, tokens = _tokenize(ctx, word)
    lam_words = _lambda_words(ctx)

    pending: Dict[Word, galois.FieldArray] = {tokens: coeff}
    normal: Dict[Word, galois.FieldArray] = {}
    while pending:
        w, c = pending.popitem()
        if c == 0:
            continue
        step = _reduce_once(ctx, w, lam_words)
        if step is None:
            normal[w] = normal[w] + c if w in normal else c
            continue
        for factor, new_word in step:
            value = c * factor
            pending[new_word] = pending[new_word] + value if new_word in pending else value

    indices = [(_normal_to_index(ctx, w), c) for w, c in normal.items() if c != 0]
    ny = max((j for (j, _, _), _ in indices), default=-1) + 1
    nx = max((i for (_, i, _), _ in indices), default=-1) + 1
    out = ctx.F.Zeros((ny, nx, ctx.N))
    for (j, i, a), c in indices:
        out[j, i, a] += c
    return HElement(ctx, out)


def generator_element(symbol: Symbol, ctx: AlgebraContext) -> HElement:
    coeff, tokens = _tokenize(ctx, [symbol])
    if not tokens:
        return HElement.constant(ctx, coeff)
    token = tokens[0]
    if token == "x":
        return HElement.x(ctx)
    if token == "y":
        return HElement.y(ctx)
    return HElement.g(ctx, int(token))


def fold_word(word: Sequence[Symbol], ctx: AlgebraContext) -> HElement:
    """The product of the generators of a word, computed with h_mul."""
    result = HElement.constant(ctx, 1)
    for symbol in word:
        result = h_mul(result, generator_element(symbol, ctx))
    return result


def random_word(ctx: AlgebraContext, length: int, rng: np.random.Generator) -> List[Symbol]:
    """Random word of the given length in x, y and the g_i."""
    alphabet: List[Symbol] = ["x", "y"] + [("g", i) for i in range(1, ctx.r + 1)]
    return [alphabet[int(k)] for k in rng.integers(0, len(alphabet), size=length)]


def oracle_agrees(word: Sequence[Any], ctx: AlgebraContext) -> bool:
    return oracle_normal_form(word, ctx) == fold_word(word, ctx)
