//! Strong Shoda pairs and primitive central idempotents of rational group algebras
//! of finite permutation groups.
//!
//! ```
//! use shoda_core::{catalog, ext_strong_shoda_pairs};
//!
//! let q8 = catalog::dicyclic(8).unwrap();
//! let report = ext_strong_shoda_pairs(&q8).unwrap();
//! assert_eq!(report.dims(), vec![1, 1, 1, 1, 4]);
//! assert!(report.complete);
//! ```

pub mod algebra;
pub mod catalog;
mod error;
pub mod group;
pub mod lattice;
pub mod oracle;
pub mod perm;
pub mod quotient;
pub mod shoda;
pub mod subgroup;

pub use algebra::{dim_formula, element_triples, AlgebraElement, GroupAlgebra, Idempotent, Provenance};
pub use catalog::{parse_group_file, parse_spec, GroupSpec};
pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use lattice::{SubgroupClass, TieBreak};
pub use oracle::{count_consistency, linear_pci_set, verify_pci_set, VerifyReport, Violation};
pub use perm::Permutation;
pub use quotient::Quotient;
pub use shoda::{
    compute_s_n, direct_strong_shoda_pairs, essp_sum_dim, ext_strong_shoda_pairs,
    ext_strong_shoda_pairs_with, is_normally_monomial, is_strong_shoda_pair,
    is_strongly_monomial, pcis_by_essp, pcis_by_ssp, search, strong_shoda_pairs,
    strong_shoda_pairs_with, PairKind, SearchOptions, SearchReport, SearchStats, ShodaPair,
    Strategy, Verdict,
};
pub use subgroup::Subgroup;
