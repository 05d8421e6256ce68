//! Special functions: the real gamma function and Appell's F₁.

mod appell;
mod gamma;

pub use appell::{
    appell_f1, appell_f1_integral, appell_f1_series, AppellArgs, EvalConfig, F1Method, F1Value, SERIES_RADIUS,
};
pub use gamma::{gamma_real, ln_gamma};
