"""Cross-domain feature-space generalization toolkit.

Projects precomputed frame features with PCA or transfer component
analysis, detects anomalies with a one-class nu-SVM, scores frame-level
detection with AUC/EER, and computes partial/complete cross-domain
generalization diagnostics including negative-transfer flags.
"""

from .data import (
    DomainDataset,
    DomainPair,
    FeatureMatrix,
    load_features,
    load_labels,
    make_synthetic_pair,
    save_features,
    save_labels,
)
from .errors import (
    CdfgError,
    ConfigError,
    DataError,
    DegenerateError,
    FormatError,
    IoError,
    NumericalError,
    ShapeError,
)
from .generalization import (
    GeneralizationReport,
    MeaningfulnessCheck,
    NegativeTransferFlag,
    RiskValue,
    compare_methods,
    detect_negative_transfer,
    g_comp,
    g_part,
    make_report,
    round_percent,
)
from .harness import (
    RunRecord,
    ScenarioConfig,
    compute_generalization,
    emit_generalization_tables,
    import_paper_tables,
    run_matrix,
    run_pair,
)
from .kernels import (
    MEDIAN_HEURISTIC,
    KernelSpec,
    center_gram,
    gram,
    kernel_eval,
    median_heuristic_gamma,
    resolve_kernel,
    sym_eig_desc,
)
from .ocsvm import OcsvmModel, ScoreSeries, ocsvm_fit, ocsvm_score, score_series
from .pca import PcaModel, pca_fit, pca_transform
from .roc import RocCurve, auc, eer, roc
from .tca import TcaModel, mmd_sq, tca_fit, tca_transform

__version__ = "0.1.0"

__all__ = [
    "CdfgError",
    "ConfigError",
    "DataError",
    "DegenerateError",
    "DomainDataset",
    "DomainPair",
    "FeatureMatrix",
    "FormatError",
    "GeneralizationReport",
    "IoError",
    "KernelSpec",
    "MEDIAN_HEURISTIC",
    "MeaningfulnessCheck",
    "NegativeTransferFlag",
    "NumericalError",
    "OcsvmModel",
    "PcaModel",
    "RiskValue",
    "RocCurve",
    "RunRecord",
    "ScenarioConfig",
    "ScoreSeries",
    "ShapeError",
    "TcaModel",
    "auc",
    "center_gram",
    "compare_methods",
    "compute_generalization",
    "detect_negative_transfer",
    "eer",
    "emit_generalization_tables",
    "g_comp",
    "g_part",
    "gram",
    "import_paper_tables",
    "kernel_eval",
    "load_features",
    "load_labels",
    "make_report",
    "make_synthetic_pair",
    "median_heuristic_gamma",
    "mmd_sq",
    "ocsvm_fit",
    "ocsvm_score",
    "pca_fit",
    "pca_transform",
    "resolve_kernel",
    "roc",
    "round_percent",
    "run_matrix",
    "run_pair",
    "save_features",
    "save_labels",
    "score_series",
    "sym_eig_desc",
    "tca_fit",
    "tca_transform",
]
