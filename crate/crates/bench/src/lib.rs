//! Fixtures shared by the criterion benches.

use ghzsplit::{rng::trial_rng, SecretSpec, VariantId};

/// A fixed random secret per variant.
pub fn fixture_secret(variant: VariantId) -> SecretSpec {
    SecretSpec::random(variant, &mut trial_rng(0xbe_4c4, 0))
}
