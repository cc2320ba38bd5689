"""Crosstalk channel estimation for mixed legacy/vectored DSL lines:
Hadamard training design, projection-based sequential least squares, a
joint maximum-likelihood cross-check, and a Monte-Carlo SINR harness."""

from .channel import (
    ChannelConfig,
    ChannelRealization,
    SYMBOL_ENERGY,
    coupling_magnitude,
    generate_channels,
)
from .estimator import (
    EstimateSet,
    estimate_joint_ml,
    estimate_joint_ml_block,
    estimate_legacy,
    estimate_sequential,
    estimate_vectored,
)
from .evaluation import (
    SweepConfig,
    SweepResult,
    SweepRow,
    run_sweep,
    run_trial,
    sinr_after_cancellation,
    sweep_to_csv,
)
from .linalg import block_inverse_2x2, hermitian, solve_least_squares
from .simulator import (
    ErrorVector,
    build_error_vector,
    draw_noise,
    error_vector_matrix_form,
    generate_legacy_data,
    receive_and_feedback,
)
from .training import (
    QAM4,
    TrainingSet,
    build_training,
    projection_q,
    random_qam,
    sylvester_hadamard,
)

__version__ = "0.1.0"
