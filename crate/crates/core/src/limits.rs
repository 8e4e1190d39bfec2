/// Desk-scale cost guards shared by the oracles and exhaustive loops.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    pub override_guards: bool,
}

impl Limits {
    pub const STRICT: Limits = Limits { override_guards: false };
    pub const LIFTED: Limits = Limits { override_guards: true };

    /// Reads `HBF_GUARD_OVERRIDE=1` from the environment.
    pub fn from_env() -> Self {
        let lifted = std::env::var("HBF_GUARD_OVERRIDE").map(|v| v == "1").unwrap_or(false);
        Limits { override_guards: lifted }
    }
}
