"""Multi-window graph fractional Fourier analysis on Cartesian product graphs.

Pipeline: build factor graphs, eigendecompose their Laplacians, raise the
bases to a fractional order, form the Kronecker joint basis, sample a bank
of spectral windows on the joint eigenvalue grid, and analyze signals with
the direct or fast multi-window transform.  Frame bounds certify stable
inversion; spectrograms feed energy metrics and anomaly detection.
"""

from .analysis import (DetectionResult, Spectrogram, detect_anomalies,
                       energy_concentration, spectrogram)
from .bench import BenchReport, BenchRow, near_square_split, run_scaling_benchmark
from .errors import (Error, FormatError, FrameConditionError, IndexRangeError,
                     InvalidGraphError, InvalidMatrixError,
                     InvalidParameterError, ShapeError)
from .fast import (AuxiliaryKernel, ThetaField, auxiliary_kernel, f2d_mwgfrft,
                   f2d_mwgfrft_aggregated, theta_field)
from .graphs import (Graph, LaplacianSystem, ProductGraph, build_graph,
                     cartesian_product, flat_index, laplacian, load_graph,
                     save_graph, unflatten_index)
from .signals import (anomaly_test_signal, impulse_signal, random_signal,
                      smooth_background)
from .spectral import (EigenSystem, FractionalBasis, JointBasis, eigendecompose,
                       fractional_basis, isgfrft, isgfrft2d, joint_basis,
                       sgfrft, sgfrft2d, spectral_filter_2d,
                       spectrum_1d_of_product)
from .transforms import (CoefficientTensor, Coefficients1D, FrameBounds,
                         frame_bounds, inverse_mwgfrft_2d, mwgfrft_1d,
                         mwgfrft_2d_direct)
from .windows import (Atom, WindowBank, WindowBank1D, atom_2d, default_taus,
                      graph_convolution_2d, make_window_bank,
                      make_window_bank_1d, modulate_1d, modulate_2d,
                      normalize_bank, translate_1d, translate_2d, window_signal)

__version__ = "0.1.0"
