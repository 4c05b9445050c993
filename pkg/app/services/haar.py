"""Monte Carlo estimates of monomial integrals over Haar-random unitaries.

This is the only floating-point code in the package; it exists to check the
exact formulas numerically.
"""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from app.core.config import settings
from app.core.exceptions import InvalidInputError
from app.models.tensors import MonomialSpec

logger = logging.getLogger(__name__)

MIN_SAMPLES = 1000


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    stderr: float
    samples: int

    def agrees_with(self, exact, sigmas: Optional[float] = None) -> bool:
        sigmas = settings.MC_TOLERANCE_SIGMAS if sigmas is None else sigmas
        return abs(self.mean - float(exact)) <= sigmas * self.stderr + 1e-12


def haar_unitaries(d: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """n Haar-distributed d×d unitaries: QR of complex Ginibre matrices with the phases of diag(R) removed."""
    z = (rng.standard_normal((n, d, d)) + 1j * rng.standard_normal((n, d, d))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diagonal = np.diagonal(r, axis1=1, axis2=2)
    return q * (diagonal / np.abs(diagonal))[:, np.newaxis, :]


def _monomial_values(spec: MonomialSpec, unitaries: np.ndarray) -> np.ndarray:
    values = np.ones(unitaries.shape[0], dtype=complex)
    for j, h in spec.u:
        values *= unitaries[:, j - 1, h - 1]
    for i, p in spec.ubar:
        values *= np.conj(unitaries[:, i - 1, p - 1])
    return values


def _stream_counts(samples: int, streams: int) -> list[int]:
    base, extra = divmod(samples, streams)
    return [base + (1 if s < extra else 0) for s in range(streams)]


def haar_mc_oracle(
    spec: MonomialSpec,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    streams: Optional[int] = None,
) -> MonteCarloEstimate:
    """Mean and standard error of Re(monomial) over ``samples`` Haar unitaries.

    The samples are split across independent ``SeedSequence`` children of
    ``seed``, so the estimate depends only on (samples, seed, streams).
    """
    samples = settings.MC_SAMPLES if samples is None else samples
    seed = settings.MC_SEED if seed is None else seed
    streams = settings.MC_STREAMS if streams is None else streams
    if samples < MIN_SAMPLES:
        raise InvalidInputError(f"The Monte Carlo oracle needs at least {MIN_SAMPLES} samples, got {samples}")
    if streams < 1:
        raise InvalidInputError(f"At least one stream is required, got {streams}")
    chunks = []
    for child, count in zip(np.random.SeedSequence(seed).spawn(streams), _stream_counts(samples, streams)):
        rng = np.random.default_rng(child)
        while count > 0:
            batch = min(count, settings.MC_BATCH_SIZE)
            chunks.append(_monomial_values(spec, haar_unitaries(spec.d, batch, rng)).real)
            count -= batch
    values = np.concatenate(chunks)
    mean = float(values.mean())
    stderr = float(values.std(ddof=1) / np.sqrt(values.size))
    logger.info(f"Monte Carlo {spec} at d={spec.d}: {mean:.6f} ± {stderr:.6f} ({samples} samples)")
    return MonteCarloEstimate(mean, stderr, samples)
