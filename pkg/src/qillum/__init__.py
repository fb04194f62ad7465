"""Finite-dimensional quantum illumination: performances, discord and their identity."""
from .discord import (
    DiscordReport,
    discord_encoded,
    discord_isotropic,
    discord_report,
    mutual_information,
    verify_theorem,
)
from .entanglement import concurrence, entanglement_of_formation
from .errors import (
    DimensionError,
    InvalidMeasurementError,
    InvalidStateError,
    NoClosedFormError,
    NotHermitianError,
)
from .information import (
    PerformanceReport,
    classical_channel_mi,
    conventional_performance,
    holevo_chi,
    performance_report,
    quantum_performance,
    restricted_performance,
    shannon_distinguishability,
)
from .linalg import (
    DensityOperator,
    Spectrum,
    commutator_norm,
    hermitian_eig,
    partial_trace,
    shannon_entropy,
    swap_operator,
    tensor,
    von_neumann_entropy,
)
from .measurements import RankOneMeasurement, random_rank1_projective
from .model import (
    CodewordEnsemble,
    IlluminationConfig,
    circuit_codeword,
    conventional_codewords,
    isotropic_spectra,
    maximally_entangled,
    maximally_mixed,
    quantum_codewords,
)

__version__ = "0.1.0"
