//! Counter-based random number generation.
//!
//! Every draw is a pure function of its key: no state, no stream objects.
//! This makes noise increments bitwise reproducible for any scheduling of
//! paths across workers. The mixing is the splitmix64 finalizer, which is
//! bijective on u64, applied to key words folded in with fixed odd
//! constants.

/// Weyl-sequence increment of splitmix64.
pub const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

const STEP_SALT: u64 = 0xD134_2543_DE82_EF95;
const FIELD_SALT: u64 = 0xDABA_0B6E_B093_22DB;
const TAG_SALT: u64 = 0x2545_F491_4F6C_DD1D;

/// splitmix64 finalizer; bijective.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stable per-path seed derivation.
///
/// `path_index * GOLDEN_GAMMA` is injective (odd multiplier), xor with the
/// master seed is bijective, and `mix64` is bijective, so distinct path
/// indices always map to distinct seeds for a fixed master seed.
pub fn derive_path_seed(master_seed: u64, path_index: u64) -> u64 {
    mix64(master_seed ^ path_index.wrapping_mul(GOLDEN_GAMMA))
}

/// Key for the increment of noise field `field` at time step `step`.
/// `tag` distinguishes sub-step blocks within one step.
pub fn increment_key(path_seed: u64, step: u64, field: u64, tag: u64) -> u64 {
    let mut h = path_seed;
    h = mix64(h ^ step.wrapping_mul(STEP_SALT));
    h = mix64(h ^ field.wrapping_mul(FIELD_SALT));
    h = mix64(h ^ tag.wrapping_mul(TAG_SALT));
    h
}

/// Standard normal draw for a key, via Box-Muller on two derived uniforms.
pub fn standard_normal(key: u64) -> f64 {
    let a = mix64(key.wrapping_add(GOLDEN_GAMMA));
    let b = mix64(key.wrapping_add(GOLDEN_GAMMA.wrapping_mul(2)));
    // u1 in (0, 1) keeps the log finite; u2 in [0, 1)
    let u1 = ((a >> 11) as f64 + 0.5) * (1.0 / 9007199254740992.0);
    let u2 = (b >> 11) as f64 * (1.0 / 9007199254740992.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Uniform draw in `[0, 1)` for a key.
pub fn uniform(key: u64) -> f64 {
    (mix64(key.wrapping_add(GOLDEN_GAMMA)) >> 11) as f64 * (1.0 / 9007199254740992.0)
}
