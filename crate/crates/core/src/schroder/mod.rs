//! Gray code for Schröder paths and, through a bijection, for the Schröder
//! permutations `S_{n+1}(1243, 2143)`.

mod bijection;
mod path;

pub use bijection::{build_phi_list, phi, place_dots, sigma_decomposition, Dot, SigmaFactor};
pub use path::{build_s_path_lists, build_s_paths, path_distance, SchroderPath, Step};
