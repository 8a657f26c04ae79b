//! Genus of X_0(N) and the asymptotic code bounds.

mod asymptotic;
mod genus;

pub use asymptotic::{
    entropy, exact_sqrt, gv_bound, prop7_bound, tvz_exceeds_gv, tvz_line, RatePoint,
    ENDPOINT_TOL, GUARD,
};
pub use genus::{
    euler_phi, genus_prime_1mod12, genus_x0, mu, mu2, mu3, mu_inf, prime_divisors, GenusReport,
};
