from itertools import product

import pytest

from skccm.bound import enumerate_loops, clear_loop_cache


def brute_force_loops(next_state, l_min, l_max):
    """Every (pattern, start, data) triple that forms a simple loop, by enumeration."""
    n = next_state.shape[0]
    found = {}
    for length in range(l_min, l_max + 1):
        for tail in product((0, 1), repeat=length - 1):
            e = (1,) + tail
            for start in range(n):
                for data in product((0, 1), repeat=length):
                    z = zp = start
                    ok = True
                    for b, eb in zip(data, e):
                        z, zp = next_state[z, b], next_state[zp, b ^ eb]
                        if z == zp:
                            ok = False
                            break
                    if not ok:
                        continue
                    if all(next_state[z, b] == next_state[zp, b] for b in (0, 1)):
                        found.setdefault(e, set()).add((start, data))
    return found


class TestEnumerateLoops:
    def test_bsm_counts(self, bsm5):
        loops = enumerate_loops(bsm5.trellis, 5)
        lengths = [lp.length for lp in loops]

        assert [lengths.count(n) for n in range(5, 11)] == [1, 1, 2, 4, 8, 16]
        for lp in loops:
            assert lp.n_instances == 2 ** (5 + lp.length)

    def test_bsm_patterns(self, bsm5):
        loops = enumerate_loops(bsm5.trellis, 5, l_max=7)

        assert [tuple(lp.e) for lp in loops] == [
            (1, 0, 0, 0, 0),
            (1, 1, 0, 0, 0, 0),
            (1, 0, 1, 0, 0, 0, 0),
            (1, 1, 1, 0, 0, 0, 0),
        ]

    def test_bsm_weights(self, bsm3):
        loops = enumerate_loops(bsm3.trellis, 3)

        assert len(loops) == 8
        assert sum(lp.weight for lp in loops) == 20

    @pytest.mark.parametrize("fixture", ("mtm3", "bsm3"))
    def test_brute_force(self, fixture, request):
        enc = request.getfixturevalue(fixture)
        loops = enumerate_loops(enc.trellis, 3)
        expected = brute_force_loops(enc.trellis.next_state, 3, 6)

        assert {tuple(int(v) for v in lp.e): set(lp.instances) for lp in loops} == expected

    def test_paths_consistent(self, mtm3):
        nxt = mtm3.trellis.next_state
        for lp in enumerate_loops(mtm3.trellis, 3):
            for i in range(lp.n_instances):
                z = zp = lp.starts[i]
                for t in range(lp.length):
                    z = nxt[z, lp.data[i, t]]
                    zp = nxt[zp, lp.data[i, t] ^ lp.e[t]]
                    assert (z, zp) == (lp.paths[i, t], lp.alt_paths[i, t])

    def test_read_only(self, bsm3):
        lp = enumerate_loops(bsm3.trellis, 3)[0]
        with pytest.raises(ValueError):
            lp.e[0] = 0

    def test_empty(self, bsm3):
        assert enumerate_loops(bsm3.trellis, 3, l_min=1, l_max=2) == []

    def test_cache(self, bsm3):
        clear_loop_cache()
        a = enumerate_loops(bsm3.trellis, 3)
        b = enumerate_loops(bsm3.trellis, 3)

        assert a is not b
        assert all(x is y for x, y in zip(a, b))

        clear_loop_cache()
        assert enumerate_loops(bsm3.trellis, 3)[0] is not a[0]

    @pytest.mark.parametrize(("l_min", "l_max"), ((0, 3), (4, 3)))
    def test_invalid_lengths(self, bsm3, l_min, l_max):
        with pytest.raises(ValueError):
            enumerate_loops(bsm3.trellis, 3, l_min, l_max)

    def test_wrong_q(self, bsm3):
        with pytest.raises(ValueError, match="states"):
            enumerate_loops(bsm3.trellis, 4)
