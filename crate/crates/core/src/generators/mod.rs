//! Instance generators: reductions from classical problems, the LP gap
//! family, and seeded random constructions.

mod random;
mod reductions;
pub mod rng;

pub use random::{
    ceil_root, default_pad_count, gen_padded_sequence, gen_planted_2frame, random_minrep,
    random_sequence, random_set_system, sample_recursive_planted, PlantedInstance, PlantedParams,
    RecursiveParams, RecursivePlanted,
};
pub use reductions::{
    ekvc_to_setcover, gen_gap_instance, names_to_text, reduce_minrep_to_ma, reduce_mis_to_am,
    reduce_setcover_to_mcss, MinRepInstance, SetCoverInstance, Superedge,
};
