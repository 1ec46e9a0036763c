"""Nonparametric LP copula modeling for mixed discrete and continuous data."""

from .margins import (EmpiricalMargin, fit_margin, mid_distribution, pseudo_observations,
                      quantile)
from .basis import LPBasis, basis_tsv, build_basis, eval_S, eval_T, unit_gram, unit_means
from .comeans import (ComeanTensor, comean_null_sd, estimate_comeans, estimate_comeans_3,
                      select_bic)
from .model import (CopulaModel, MaxCorrelation, SpectralDecomposition, TreeCopula,
                    conditional_profile, density, density_grid, fit_copula, fit_tree,
                    grid_tsv, max_correlation, spectral)
from .inference import (SmallSampleWarning, SpearmanResult, TestResult,
                        generalized_spearman, lpinfor, lpsym)
from .reference import FAMILIES, khoudraji, make_family, sample, true_density
from .bench import BenchConfig, BenchReport, replication_seed, run_miae, run_timing
from .datasets import Dataset, ingest, load_dataset

__version__ = "0.1.0"
