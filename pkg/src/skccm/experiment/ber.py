"""
Seeded Monte Carlo bit error rate sweeps

skccm developers
"""
from dataclasses import dataclass, field
import logging
from multiprocessing import Pool
from warnings import warn

from numpy import count_nonzero, isfinite, log10, nan
from pandas import DataFrame

from skccm.channel import NoiseModel
from skccm.experiment.links import build_link
from skccm.utility.internal import keyed_rng

__all__ = ["BerCurve", "run_ber", "simulate_block", "ebn0_at_ber"]

logger = logging.getLogger(__name__)

# stream roles of a block
_DATA, _NOISE = 0, 1

_COLUMNS = ["ebn0_db", "bits_sent", "bit_errors", "ber", "capped"]

_WORKER_LINK = None


@dataclass
class BerCurve:
    """
    Attributes
    ----------
    points : list of tuple
        (ebn0_db, bits_sent, bit_errors, ber, capped) per grid point. `capped` is 1 when
        the point stopped on the bit cap before reaching the error target.
    metadata : dict
        Echo of the experiment configuration.
    """

    points: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def to_frame(self):
        return DataFrame(self.points, columns=_COLUMNS)


def simulate_block(link, ebn0_idx, block_idx, noise, n_bits):
    """
    Simulate one block with the data and noise streams keyed by the block position.

    Returns
    -------
    n_errors : int
        Bit errors among the `n_bits` information bits.
    """
    data_rng = keyed_rng(noise.seed, ebn0_idx, block_idx, _DATA)
    bits = data_rng.integers(0, 2, size=n_bits, dtype="int8")
    noise_rng = keyed_rng(noise.seed, ebn0_idx, block_idx, _NOISE)
    decoded = link.run_block(bits, noise, noise_rng)
    return int(count_nonzero(decoded != bits))


def _init_worker(link):
    global _WORKER_LINK
    _WORKER_LINK = link


def _worker_block(args):
    return simulate_block(_WORKER_LINK, *args)


def _block_sizes(cfg):
    # the last block is shortened so no point sends more than the bit cap
    n = cfg.block_info_bits
    cap = cfg.stop_max_bits
    i = 0
    while i * n < cap:
        yield i, min(n, cap - i * n)
        i += 1


def _run_point(cfg, link, ebn0_idx, noise, pool):
    bits_sent = errors = 0
    sizes = _block_sizes(cfg)
    batch = 1 if pool is None else 4 * cfg.workers

    while True:
        jobs = []
        for _ in range(batch):
            nxt = next(sizes, None)
            if nxt is None:
                break
            jobs.append((ebn0_idx, nxt[0], noise, nxt[1]))
        if not jobs:
            return bits_sent, errors, 1

        if pool is None:
            results = [simulate_block(link, *j) for j in jobs]
        else:
            results = pool.map(_worker_block, jobs)

        # accumulate in block order, later blocks of the batch are discarded
        for job, n_err in zip(jobs, results):
            bits_sent += job[3]
            errors += n_err
            if errors >= cfg.stop_min_errors:
                return bits_sent, errors, 0


def run_ber(cfg, link=None):
    """
    Simulate the bit error rate over the Eb/N0 grid.

    Each point sends blocks of fresh random bits until `sim.stop_min_errors` errors are
    counted or `sim.stop_max_bits` bits are sent. Data and noise of a block come from
    streams keyed by (seed, Eb/N0 index, block index), and blocks are accumulated in
    order, so the result does not depend on the number of workers.

    Parameters
    ----------
    cfg : skccm.experiment.ExperimentConfig
    link : {None, object}, optional
        Link to simulate, built from `cfg` if not given.

    Returns
    -------
    curve : BerCurve
    """
    if link is None:
        link = build_link(cfg)

    curve = BerCurve(metadata=cfg.echo())
    pool = None
    if cfg.workers > 1:
        pool = Pool(cfg.workers, initializer=_init_worker, initargs=(link,))
    try:
        for i, ebn0_db in enumerate(cfg.ebn0_grid):
            noise = NoiseModel(ebn0_db, link.power, seed=cfg.master_seed)
            bits_sent, errors, capped = _run_point(cfg, link, i, noise, pool)
            ber = errors / bits_sent
            curve.points.append((ebn0_db, bits_sent, errors, ber, capped))

            logger.info(
                f"Eb/N0 {ebn0_db} dB: {errors} errors in {bits_sent} bits "
                f"(ber={ber:.3e}, capped={bool(capped)})"
            )
            if capped and errors > 0:
                warn(
                    f"Eb/N0 {ebn0_db} dB reached the bit cap with {errors} errors, the BER "
                    f"estimate is unreliable.",
                    UserWarning,
                )
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    return curve


def ebn0_at_ber(curve, target):
    """
    Eb/N0 at which a simulated curve crosses a target bit error rate, by linear
    interpolation of log10(BER) between grid points.

    Parameters
    ----------
    curve : {BerCurve, pandas.DataFrame}
    target : float
        Target BER, in (0, 1).

    Returns
    -------
    ebn0_db : float
        NaN if the target is not bracketed by two points with non-zero BER.
    """
    if not 0 < target < 1:
        raise ValueError("`target` must be in (0, 1).")
    df = curve.to_frame() if isinstance(curve, BerCurve) else curve

    pts = [(e, b) for e, b in zip(df["ebn0_db"], df["ber"]) if b > 0]
    lt = log10(target)
    for (e0, b0), (e1, b1) in zip(pts[:-1], pts[1:]):
        l0, l1 = log10(b0), log10(b1)
        if l0 >= lt >= l1 and l0 != l1:
            res = e0 + (lt - l0) * (e1 - e0) / (l1 - l0)
            return float(res) if isfinite(res) else nan
    return nan
