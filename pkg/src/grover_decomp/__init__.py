"""Phase-matched Grover search with certainty: exact-search parameter
solving, matrix-free simulation, additive decomposition into
single-oracle forms, a dense shortcut unitary, and a two-channel
tensor-space variant."""

from .errors import (DegenerateSeed, DimensionMismatch, GroverDecompError,
                     InfeasibleK, NonIntegralM, NonSquare, OutOfRange,
                     ThetaInconsistent, TooLargeForDense)
from .linalg import (complete_basis, gram_schmidt_complete, is_unitary,
                     tensor_product)
from .params import (SearchParams, exact_rotation_phase, matching_phase,
                     optimal_iterations, rotation_phase, solve)
from .operators import (CallCounter, KernelSpectrum, TargetSet,
                        TwoDimAmplitudes, apply_diffusion, apply_oracle,
                        dense_kernel_matrix, grover_iterate, initial_state,
                        kernel_eigenvalues, two_dim_amplitudes,
                        two_dim_kernel)
from .decomposition import (AmplitudePair, DecompositionCoeffs,
                            check_reduced_operator_unitarity, even_odd_split,
                            f_coefficients, reduced_state_I, reduced_state_II,
                            stepwise_expansion, target_amplitudes)
from .shortcut import (ShortcutOperator, VerificationReport, build_shortcut,
                       iterative_matrix_power, verify_shortcut)
from .parallel import (ParallelOperator, apply_factored,
                       build_parallel_operator, verify_decoupling)

__version__ = "0.1.0"
