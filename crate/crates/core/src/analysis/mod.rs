//! Measurement: sampling, spectra, zeros, dynamic range and its bounds.

mod bounds;
mod compare;
mod dynamic_range;
mod sampling;
mod spectrum;
mod zeros;

pub use bounds::{bound_configuration, sigma_bounds, BoundConfiguration, BoundFamily, SigmaBounds};
pub use compare::{compare_methods, matched_constraints, matched_kernel, MethodComparison};
pub use dynamic_range::{
    default_domain, default_region, dynamic_range, dynamic_range_on, DynamicRangeReport, DEFAULT_RESOLUTION,
};
pub use sampling::{sample_uniform, SampledSignal};
pub use spectrum::{
    analytic_sinc_spectrum, periodic_spectrum, verify_bandlimit, windowed_spectrum, SpectrumReport, SpectrumWindow,
    Taper, BAND_EDGE_RTOL,
};
pub use zeros::{find_zeros, local_frequencies, ZeroSet, DEFAULT_ZERO_TOL};
