import pytest
from numpy import arange, array_equal, bincount, concatenate

from skccm.encoder import MapKind, CcmEncoder, bsm_step, mtm_step, encode_step, build_trellis
from skccm.encoder.maps import get_map_step


class TestMapKind:
    @pytest.mark.parametrize(("value", "kind"), (("bsm", MapKind.BSM), ("MTM", MapKind.MTM)))
    def test_parse(self, value, kind):
        assert MapKind.parse(value) is kind

    def test_parse_error(self):
        with pytest.raises(ValueError, match="not recognized"):
            MapKind.parse("logistic")

    def test_custom_step(self):
        def step(state, bit, q):
            return (state + bit) % (1 << q)

        assert get_map_step(step) is step


class TestEncodeStep:
    @pytest.mark.parametrize(("state", "bit", "nxt"), ((0, 0, 0), (10, 1, 21), (20, 0, 8)))
    def test_bsm(self, bsm5, state, bit, nxt):
        assert encode_step(bsm5, state, bit) == nxt

    @pytest.mark.parametrize(
        ("state", "bit", "nxt"),
        (
            (0, 0, 0),
            (0, 1, 1),  # 1 - T(0) = 1 wraps to 0, plus 1/8
            (3, 0, 6),
            (5, 1, 3),  # 1 - T(5/8) = 2/8, plus 1/8
            (4, 0, 0),  # T(1/2) = 1 wraps to 0
            (4, 1, 1),
            (7, 0, 2),
        ),
    )
    def test_mtm(self, mtm3, state, bit, nxt):
        assert encode_step(mtm3, state, bit) == nxt

    @pytest.mark.parametrize(("state", "bit"), ((-1, 0), (8, 0), (0, 2)))
    def test_invalid(self, mtm3, state, bit):
        with pytest.raises(ValueError):
            encode_step(mtm3, state, bit)


class TestBuildTrellis:
    def test_bsm_closed_form(self, bsm5):
        tr = build_trellis(bsm5)
        k = arange(32)

        assert tr.next_state.shape == (32, 2)
        assert array_equal(tr.next_state[:, 0], (2 * k) % 32)
        assert array_equal(tr.next_state[:, 1], (2 * k) % 32 + 1)
        assert array_equal(tr.output_state, tr.next_state)

    @pytest.mark.parametrize("kind", (MapKind.BSM, MapKind.MTM))
    @pytest.mark.parametrize("q", (2, 3, 5))
    def test_balanced(self, kind, q):
        tr = build_trellis(CcmEncoder(q, map=kind))
        incoming = bincount(concatenate((tr.next_state[:, 0], tr.next_state[:, 1])), minlength=1 << q)

        assert (incoming == 2).all()

    def test_vectorized_matches_scalar(self):
        k = arange(16)
        assert array_equal(bsm_step(k, 1, 4), [bsm_step(int(i), 1, 4) for i in k])
        assert array_equal(mtm_step(k, 0, 4), [mtm_step(int(i), 0, 4) for i in k])

    def test_out_of_grid(self):
        with pytest.raises(ValueError, match="outside of the grid"):
            build_trellis(CcmEncoder(3, map=lambda s, b, q: s + b))
