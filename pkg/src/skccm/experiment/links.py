"""
Assembly of the simulated links from an experiment configuration

skccm developers
"""
import logging

from skccm.encoder import (
    CcmEncoder,
    MapKind,
    read_conjugation,
    encode_block,
    terminate_block,
    stationary_distribution,
)
from skccm.channel import HpaModel, IdealAmplifier, compute_norm, transmit
from skccm.decoding import DecoderConfig, map_decode
from skccm.bound import enumerate_loops
from skccm.optimize import OptimizerConfig, optimize_h
from skccm.baseline import BaselineLink

__all__ = [
    "CcmLink",
    "build_link",
    "build_encoder",
    "build_hpa",
    "build_optimizer_config",
    "resolve_conjugation",
    "loops_for",
]

logger = logging.getLogger(__name__)


def build_encoder(cfg, conj=None):
    if not cfg.is_ccm:
        raise ValueError("The baseline scheme has no chaos-coded encoder.")
    kind = MapKind.BSM if cfg.scheme == "ccm_bsm" else MapKind.MTM
    return CcmEncoder(cfg.q, map=kind, conj=conj)


def build_hpa(cfg, power=None):
    """
    Amplifier from the configuration, without output normalization.

    Parameters
    ----------
    cfg : ExperimentConfig
    power : {None, float}, optional
        Average input power, needed for average-referenced back-off.
    """
    if cfg["hpa.model"] == "ideal":
        return IdealAmplifier(backoff_reference=cfg["hpa.backoff_reference"])
    return HpaModel(
        alpha=cfg["hpa.alpha"],
        beta=cfg["hpa.beta"],
        ibo_db=cfg["hpa.ibo_db"],
        backoff_reference=cfg["hpa.backoff_reference"],
        power=power if cfg["hpa.backoff_reference"] == "average" else None,
    )


def build_optimizer_config(cfg):
    return OptimizerConfig(
        m=cfg["optimizer.m"],
        ebn0_db=cfg["optimizer.ebn0_db"],
        max_iterations=cfg["optimizer.max_iterations"],
        objective_tolerance=cfg["optimizer.objective_tolerance"],
        step_tolerance=cfg["optimizer.step_tolerance"],
        seed_shape=cfg["optimizer.seed_shape"],
        seed=cfg["optimizer.seed"],
    )


def loops_for(cfg, encoder):
    return enumerate_loops(
        encoder.trellis, encoder.q, l_min=cfg["bound.l_min"], l_max=cfg["bound.l_max"]
    )


def resolve_conjugation(cfg, encoder=None):
    """
    Conjugation function named by `ccm.conjugation`: the identity, a file, or the
    result of running the optimizer.

    Returns
    -------
    conj : {None, skccm.encoder.ConjugationFunction}
        None for the identity on the state grid.
    """
    source = cfg.conj_source
    if source == "identity":
        return None
    if source != "optimize":
        return read_conjugation(source)

    encoder = build_encoder(cfg) if encoder is None else encoder
    stats = stationary_distribution(encoder)
    logger.info("Optimizing the conjugation function before the run")
    trace = optimize_h(
        encoder,
        build_hpa(cfg, stats.p),
        loops_for(cfg, encoder),
        build_optimizer_config(cfg),
        stats=stats,
    )
    return trace.final


class CcmLink:
    """
    Chaos-coded link: terminated encoder, normalized amplifier, AWGN, MAP decoder.

    Parameters
    ----------
    encoder : skccm.encoder.CcmEncoder
    hpa : skccm.channel.HpaModel
        Amplifier; normalized here for the encoder's stationary constellation.
    decoder : {None, skccm.decoding.DecoderConfig}, optional
    initial_state : int, optional
        Encoder state at the start of every block. Default is 0.
    """

    def __repr__(self):
        return f"CcmLink(encoder={self.encoder!r}, hpa={self.hpa!r}, decoder={self.decoder!r})"

    def __init__(self, encoder, hpa, decoder=None, initial_state=0):
        self.encoder = encoder
        self.decoder = DecoderConfig() if decoder is None else decoder
        self.initial_state = int(initial_state)

        self.stats = stationary_distribution(encoder)
        self.power = self.stats.p
        self.hpa = hpa.with_norm(compute_norm(hpa, self.stats, encoder.levels))

    def run_block(self, bits, noise, rng):
        """
        Send one block of information bits and return the decoded bits.
        """
        tx = terminate_block(self.encoder, bits) if self.decoder.termination else bits
        seq = encode_block(self.encoder, tx, initial_state=self.initial_state)
        r = transmit(self.hpa, noise, seq.x, rng=rng).r
        post = map_decode(
            self.encoder.trellis,
            self.encoder.conj,
            self.decoder,
            noise,
            r,
            hpa=self.hpa,
            n_info=len(bits),
        )
        return post.bits


def build_link(cfg, conj=None):
    """
    Link named by the configuration's scheme.

    Parameters
    ----------
    cfg : ExperimentConfig
    conj : {None, skccm.encoder.ConjugationFunction}, optional
        Conjugation function for chaos-coded schemes; resolved from the configuration
        if not given.

    Returns
    -------
    link : {CcmLink, skccm.baseline.BaselineLink}
        Object with a `power` attribute and a `run_block(bits, noise, rng)` method.
    """
    if not cfg.is_ccm:
        return BaselineLink(build_hpa(cfg, power=1.0))

    encoder = build_encoder(cfg)
    if conj is None:
        conj = resolve_conjugation(cfg, encoder)
    if conj is not None:
        encoder = encoder.with_conjugation(conj)

    stats = stationary_distribution(encoder)
    decoder = DecoderConfig(
        metric_constellation=cfg["decoder.metric"], termination=cfg["decoder.termination"]
    )
    return CcmLink(
        encoder, build_hpa(cfg, stats.p), decoder, initial_state=cfg["ccm.initial_state"]
    )
