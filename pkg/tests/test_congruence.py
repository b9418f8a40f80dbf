from collections import Counter

import pytest

import golden
from qck.cache import PairCache
from qck.congruence import (check_permutation_lemma, class_index, decide, enumerate_classes, has_blocking_pair,
                            hypo_equiv, plactic_equiv, related_pairs, verify_congruence_property,
                            verify_quotient_inclusion, weight_preserved, weights_linearly_independent)
from qck.core import standard_crystal_A, standard_crystal_C
from qck.graphs import iso_from
from qck.products import Mode
from qck.words import all_words, word_e, word_f

BASES = {("A", n): standard_crystal_A(n) for n in (2, 3, 4)}
BASES.update({("C", n): standard_crystal_C(n) for n in (2, 3)})
A2, A3, C2, C3 = BASES["A", 2], BASES["A", 3], BASES["C", 2], BASES["C", 3]


@pytest.mark.parametrize("kind, n, u, v", golden.PLACTIC_RELATED)
def test_plactic_examples(kind, n, u, v):
    assert plactic_equiv(BASES[kind, n], u, v)


@pytest.mark.parametrize("kind, n, u, v", golden.HYPO_RELATED)
def test_hypoplactic_examples(kind, n, u, v):
    assert hypo_equiv(BASES[kind, n], u, v)


@pytest.mark.parametrize("kind, n, u, v", golden.HYPO_UNRELATED)
def test_hypoplactic_non_examples(kind, n, u, v):
    assert not hypo_equiv(BASES[kind, n], u, v)


def test_simple_non_relations():
    assert not plactic_equiv(A2, (1, 2), (2, 1))
    assert not plactic_equiv(A3, (1, 1, 2), (2, 1, 1))


def test_small_class_count():
    classes = enumerate_classes(A2, Mode.TENSOR, 2)
    assert len(classes) == 7 and all(len(c.members) == 1 for c in classes)


def test_class_of_a_letter_in_c3():
    classes = enumerate_classes(C3, Mode.TENSOR, 3)
    by_word = class_index(classes)
    cls = classes[by_word[(1,)]]
    assert cls.members == ((1,), (1, 1, -1), (1, 2, -2), (1, -1, 1))
    assert cls.representative == (1,)


@pytest.mark.parametrize("base, max_len", [(A2, 4), (A3, 3), (C2, 2)], ids=["A2", "A3", "C2"])
@pytest.mark.parametrize("mode", list(Mode))
def test_classes_agree_with_pairwise_decisions(base, max_len, mode):
    classes = enumerate_classes(base, mode, max_len)
    words = list(all_words(base, max_len))
    assert sorted(w for c in classes for w in c.members) == sorted(words)
    where = class_index(classes)
    for u in words:
        for v in words:
            assert (where[u] == where[v]) == iso_from(mode, base, u, v), (u, v)


@pytest.mark.parametrize("base", [A2, A3, C2], ids=["A2", "A3", "C2"])
@pytest.mark.parametrize("mode", list(Mode))
def test_classes_preserve_weight(base, mode):
    assert weight_preserved(base, enumerate_classes(base, mode, 3))


@pytest.mark.parametrize("mode", list(Mode))
def test_type_a_classes_are_letter_permutations(mode):
    for c in enumerate_classes(A3, mode, 4):
        assert len({frozenset(Counter(w).items()) for w in c.members}) == 1


@pytest.mark.parametrize("base", [A3, C2], ids=["A3", "C2"])
@pytest.mark.parametrize("mode", list(Mode))
def test_operators_respect_classes(base, mode):
    """Related words have related images under every operator, or both images are undefined."""
    classes = enumerate_classes(base, mode, 3)
    where = class_index(classes)
    for u, v in related_pairs(classes):
        for i in base.indices:
            for op in (word_e, word_f):
                x, y = op(mode, base, i, u), op(mode, base, i, v)
                assert (x is None) == (y is None)
                if x is not None and len(x) <= 3:
                    assert where[x] == where[y]


@pytest.mark.parametrize("base", [A2, C2], ids=["A2", "C2"])
@pytest.mark.parametrize("mode", list(Mode))
def test_congruence_property_small(base, mode):
    report = verify_congruence_property(base, mode, 3)
    assert report.ok and report.checked > 0


def test_congruence_property_explicit_contexts():
    report = verify_congruence_property(A3, Mode.TENSOR, 3, contexts=[((3,), (1, 2))])
    assert report.ok


def test_weight_independence():
    assert weights_linearly_independent(A3)
    assert not weights_linearly_independent(C2)


def test_quotient_small():
    assert verify_quotient_inclusion(A2, 4).holds
    result = verify_quotient_inclusion(C3, 2)
    assert not result.holds
    assert result.counterexample == ((1, -1), ())
    assert str(result).startswith("COUNTEREXAMPLE")


def test_blocking_pairs_in_permutations():
    assert has_blocking_pair(A3, (1, 2), 1) and not has_blocking_pair(A3, (2, 1), 1)
    assert check_permutation_lemma(A3, 3).ok


def test_pair_cache_round_trip(tmp_path):
    cache = PairCache(tmp_path)
    assert decide(Mode.TENSOR, A3, (1, 1, 2), (1, 2, 1), cache=cache)
    assert cache.get(A3, Mode.TENSOR, (1, 2, 1), (1, 1, 2)) is True
    cache.put(A3, Mode.TENSOR, (1,), (2,), True)
    # a cached verdict is trusted as stored
    assert decide(Mode.TENSOR, A3, (2,), (1,), cache=cache)
    assert not decide(Mode.QTENSOR, A3, (2,), (1,), cache=cache)


def test_negative_length_rejected():
    with pytest.raises(ValueError):
        enumerate_classes(A2, Mode.TENSOR, -1)
