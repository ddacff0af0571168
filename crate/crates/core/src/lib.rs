pub mod error;
pub mod method;
pub mod oracle;
pub mod reference;
pub mod roots;
pub mod specfun;
pub mod spectrum;
pub mod wavefunction;

pub use error::{Error, Result};
