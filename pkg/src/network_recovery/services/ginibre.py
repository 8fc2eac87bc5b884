"""
Ginibre Service - Truncated Ginibre projection process on the domain square

Points are drawn one at a time from the conditional density of a
projection determinantal process: with Phi(x) the vector of the first N
basis functions at x and P the projection onto the orthogonal complement
of the features of all points placed so far, the next point has density
proportional to |P Phi(x)|^2. Existing vertices enter through the same
update as drawn ones.
"""
import logging
import math
from typing import List, Optional, Sequence, Union

import numpy as np
from scipy.special import gammaln

from ..exceptions import OverConstrainedError
from ..models import Domain, GinibreKernel, Point2, SamplerSettings, TaggedPoint, as_array
from .geometry import lattice_samples

logger = logging.getLogger(__name__)

ORTHONORMAL_TOL = 1e-9
# K(z, z) never exceeds this, conditioned or not
DENSITY_CEILING = 1 / math.pi
_BATCH = 64
# Envelopes below this are rounding residue of a fully spanned kernel
_VANISHING = 1e-12


def basis_matrix(z: Union[complex, np.ndarray], n: int) -> np.ndarray:
    """phi_k(z) for k < n as an (m, n) array, via log-factorials"""
    z = np.asarray(z, dtype=complex).reshape(-1)
    k = np.arange(n)
    modulus = np.abs(z)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_mod = (
            -0.5 * modulus[:, None] ** 2
            + k[None, :] * np.log(modulus)[:, None]
            - 0.5 * (math.log(math.pi) + gammaln(k + 1))[None, :]
        )
    at_origin = modulus == 0
    if at_origin.any():
        log_mod[at_origin, :] = -np.inf
        log_mod[at_origin, 0] = -0.5 * math.log(math.pi)
    phase = np.exp(1j * k[None, :] * np.angle(z)[:, None])
    return np.exp(log_mod) * phase


def basis_eval(k: int, z: complex) -> complex:
    """phi_k(z) = exp(-|z|^2 / 2) z^k / sqrt(pi k!)"""
    if k < 0:
        raise ValueError(f"Basis index must be >= 0, got {k}")
    return complex(basis_matrix(z, k + 1)[0, k])


def _as_complex(z: Union[complex, Point2]) -> complex:
    if isinstance(z, Point2):
        return complex(z.x, z.y)
    return complex(z)


def kernel_diag(kernel: GinibreKernel, z: Union[complex, Point2]) -> float:
    """K(z, z) = sum over k < N of |phi_k(z)|^2, z in disk coordinates"""
    features = basis_matrix(_as_complex(z), kernel.truncation)
    return float(np.sum(np.abs(features) ** 2))


class GinibreSampler:
    """Sequential sampler state: orthonormal features of every placed point"""

    def __init__(
        self,
        kernel: GinibreKernel,
        rng: np.random.Generator,
        settings: Optional[SamplerSettings] = None
    ):
        self.kernel = kernel
        self.rng = rng
        self.settings = settings or SamplerSettings()
        self._basis = np.empty((0, kernel.truncation), dtype=complex)

        lattice = lattice_samples(kernel.domain, self.settings.envelope_grid)
        self._lattice_features = basis_matrix(kernel.to_disk(lattice), kernel.truncation)
        self._lattice_density = np.sum(np.abs(self._lattice_features) ** 2, axis=1)
        self.proposals = 0

    @property
    def rank(self) -> int:
        return self._basis.shape[0]

    def features(self, coords: np.ndarray) -> np.ndarray:
        return basis_matrix(self.kernel.to_disk(coords), self.kernel.truncation)

    def density(self, features: np.ndarray) -> np.ndarray:
        """Conditional density (up to a constant) at the given feature rows"""
        dens = np.sum(np.abs(features) ** 2, axis=1)
        if self.rank:
            coeffs = features @ self._basis.conj().T
            dens = dens - np.sum(np.abs(coeffs) ** 2, axis=1)
        return np.maximum(dens, 0.0)

    def orthonormality_error(self) -> float:
        if not self.rank:
            return 0.0
        gram = self._basis @ self._basis.conj().T
        return float(np.max(np.abs(gram - np.eye(self.rank))))

    def _add_feature(self, feature: np.ndarray) -> bool:
        norm2 = float(np.vdot(feature, feature).real)
        v = feature.astype(complex, copy=True)
        # Two Gram-Schmidt passes keep the rows orthonormal to rounding
        for _ in range(2):
            if self.rank:
                v = v - (self._basis.conj() @ v) @ self._basis
        residual = float(np.vdot(v, v).real)
        if residual <= 1e-12 * max(norm2, 1e-300):
            return False
        e = v / math.sqrt(residual)
        self._basis = np.vstack([self._basis, e])
        self._lattice_density = np.maximum(
            self._lattice_density - np.abs(self._lattice_features @ e.conj()) ** 2, 0.0
        )
        if self.orthonormality_error() > ORTHONORMAL_TOL:
            self._reorthonormalize()
        return True

    def _reorthonormalize(self) -> None:
        q, _ = np.linalg.qr(self._basis.T)
        self._basis = q.T.copy()
        self._lattice_density = self.density(self._lattice_features)
        logger.debug("Re-orthonormalized sampler basis of rank %d", self.rank)

    def condition_on(self, points: Sequence[Union[Point2, TaggedPoint]]) -> int:
        """Treat points as already drawn; returns how many raised the rank"""
        if not points:
            return 0
        added = 0
        for row in self.features(as_array(points)):
            added += self._add_feature(row)
        return added

    def draw(self, within_domain: bool = True) -> Point2:
        """Draw the next point and condition on it

        With ``within_domain`` False proposals cover the whole sampling disk
        (mapped onto the circumscribed circle), i.e. the law before the
        restriction to the square.
        """
        if within_domain:
            envelope = min(DENSITY_CEILING, self.settings.safety_factor * float(self._lattice_density.max()))
        else:
            envelope = DENSITY_CEILING
        if envelope <= _VANISHING:
            raise OverConstrainedError("conditional density vanishes on the envelope lattice")

        a = self.kernel.domain.side_length
        tried = 0
        while tried < self.settings.max_proposals:
            batch = min(_BATCH, self.settings.max_proposals - tried)
            if within_domain:
                coords = self.rng.uniform(0.0, a, size=(batch, 2))
            else:
                radius = self.kernel.domain.circumradius * np.sqrt(self.rng.uniform(size=batch))
                angle = self.rng.uniform(0.0, 2 * math.pi, size=batch)
                coords = np.column_stack([a / 2 + radius * np.cos(angle), a / 2 + radius * np.sin(angle)])
            accept = self.rng.uniform(size=batch) * envelope
            features = self.features(coords)
            hits = np.flatnonzero(accept <= self.density(features))
            if hits.size:
                first = int(hits[0])
                tried += first + 1
                self.proposals += first + 1
                self._add_feature(features[first])
                return Point2(float(coords[first, 0]), float(coords[first, 1]))
            tried += batch
            self.proposals += batch
        raise OverConstrainedError(
            f"no point accepted after {tried} proposals with {self.rank} placed points"
        )


def sample_conditioned(
    n_new: int,
    existing: Sequence[Union[Point2, TaggedPoint]],
    domain: Domain,
    seed: int,
    settings: Optional[SamplerSettings] = None
) -> List[Point2]:
    """n_new points of the truncated Ginibre process given the existing ones"""
    if n_new < 0:
        raise ValueError(f"Number of points must be >= 0, got {n_new}")
    if n_new == 0:
        return []
    settings = settings or SamplerSettings()
    for p in existing:
        pos = p.position if isinstance(p, TaggedPoint) else p
        if not domain.contains(pos):
            raise ValueError(f"Conditioning point ({pos.x}, {pos.y}) lies outside the domain")

    kernel = GinibreKernel.for_points(len(existing) + n_new, domain, settings.margin)
    sampler = GinibreSampler(kernel, np.random.default_rng(seed), settings)
    sampler.condition_on(existing)
    drawn = [sampler.draw() for _ in range(n_new)]
    logger.debug(
        "Drew %d Ginibre points (N=%d, %d conditioning) in %d proposals",
        n_new, kernel.truncation, len(existing), sampler.proposals,
    )
    return drawn
