//! Real-valued special functions: the Gamma family, Kummer's M and U, and
//! Hermite polynomials.

mod gamma;
mod hermite;
mod kummer;

pub use gamma::{gamma, log_gamma, reciprocal_gamma};
pub use hermite::hermite;
pub use kummer::{kummer_m, kummer_u_half, kummer_u_half_origin, KummerParams};

pub(crate) use kummer::kummer_u_half_relative;
