from hypothesis import given
from hypothesis import strategies as st

from simperm.trie import PermSet

seqs = st.lists(st.lists(st.integers(1, 6), max_size=6).map(tuple), max_size=40)


@given(seqs, seqs)
def test_behaves_like_a_set(inserted, queried):
    s = PermSet()
    ref = set()
    for item in inserted:
        assert s.add(item) == (item not in ref)
        ref.add(item)
    assert len(s) == len(ref)
    for item in inserted + queried:
        assert (item in s) == (item in ref)
    assert list(s) == sorted(ref, key=lambda t: (len(t), t))


def test_sizes_and_order():
    s = PermSet([(3, 1, 4, 2), (2, 4, 1, 3), (1,), (2, 1), (1, 2)])
    assert s.sizes() == [1, 2, 4]
    assert s.count(2) == 2 and s.count(3) == 0
    assert list(s.of_size(4)) == [(2, 4, 1, 3), (3, 1, 4, 2)]
    assert (2, 4, 1) not in s and (2, 4, 1, 3, 5) not in s


def test_prefix_is_not_member():
    s = PermSet([(1, 2, 3)])
    assert (1, 2) not in s
