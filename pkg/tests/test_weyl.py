from itertools import permutations

import pytest

from queerpbw.weyl import (Root, beta_sequence, brute_force_reduced_words, enumerate_reduced_words,
                           is_reduced, lemroot_position, longest, parse_word, perm_length,
                           positive_roots, reflect_root, sigma_word, word_to_perm)


def test_word_to_perm_examples():
    assert word_to_perm((1, 2, 1), 3) == longest(3)
    assert perm_length(word_to_perm((1, 2, 1), 3)) == 3
    assert is_reduced((1, 2, 1), 3)
    assert not is_reduced((1, 1), 3)
    assert word_to_perm((), 3) == (1, 2, 3)
    assert perm_length((1, 2, 3)) == 0


def test_index_out_of_range():
    with pytest.raises(ValueError):
        word_to_perm((3,), 3)


def test_reflect_root_examples():
    assert reflect_root(1, Root(2, 3)) == Root(1, 3)
    assert reflect_root(2, Root(2, 3)) == Root(3, 2)
    assert reflect_root(1, Root(3, 4)) == Root(3, 4)


@pytest.mark.parametrize("n", [3, 4])
def test_reflect_root_involution(n):
    roots = [Root(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]
    for i in range(1, n):
        images = {reflect_root(i, r) for r in roots}
        assert images == set(roots)
        assert all(reflect_root(i, reflect_root(i, r)) == r for r in roots)


def test_beta_examples():
    assert beta_sequence((1, 2, 1), 3) == [Root(1, 2), Root(1, 3), Root(2, 3)]
    assert beta_sequence((2, 1, 2), 3) == [Root(2, 3), Root(1, 3), Root(1, 2)]


def test_beta_rejects_non_w0():
    with pytest.raises(ValueError):
        beta_sequence((1, 2), 3)
    with pytest.raises(ValueError):
        beta_sequence((1, 1, 2), 3)


def _beta_by_perms(w, n):
    # prefix permutation acting on eps indices, computed from scratch
    out = []
    x = list(range(n + 1))
    for i in w:
        out.append(Root(x[i], x[i + 1]))
        x[i], x[i + 1] = x[i + 1], x[i]
    return out


@pytest.mark.parametrize("n", [3, 4])
def test_beta_sequences_cover_positive_roots(n):
    for w in brute_force_reduced_words(n):
        seq = beta_sequence(w, n)
        assert seq == _beta_by_perms(w, n)
        assert sorted(seq) == sorted(positive_roots(n))


def test_sigma_word():
    assert sigma_word(2) == (1,)
    assert sigma_word(3) == (1, 2, 1)
    assert sigma_word(4) == (1, 2, 1, 3, 2, 1)
    assert is_reduced(sigma_word(5), 5) and len(sigma_word(5)) == 10


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_lemroot_matches_beta_scan(n):
    seq = beta_sequence(sigma_word(n), n)
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            assert seq[lemroot_position(i, j, n) - 1] == Root(i, j)
    assert lemroot_position(1, 2, n) == 1


def test_lemroot_examples():
    assert lemroot_position(2, 3, 3) == 3
    with pytest.raises(ValueError):
        lemroot_position(3, 2, 3)


def test_enumerate_reduced_words():
    words, _ = enumerate_reduced_words(longest(3))
    assert words == {(1, 2, 1), (2, 1, 2)}
    words, edges = enumerate_reduced_words(longest(4))
    assert len(words) == 16
    assert words == set(brute_force_reduced_words(4))
    assert {e.case for e in edges} == {1, 2}
    words, edges = enumerate_reduced_words((1, 2, 3))
    assert words == {()} and edges == []


@pytest.mark.parametrize("n", [3, 4])
def test_reduced_words_closed_under_moves(n):
    for p in permutations(range(1, n + 1)):
        words, edges = enumerate_reduced_words(p)
        assert all(word_to_perm(w, n) == p and len(w) == perm_length(p) for w in words)
        assert all(e.dst in words for e in edges)


def test_parse_word():
    assert parse_word("1,2,1") == (1, 2, 1)
    assert parse_word("") == ()
