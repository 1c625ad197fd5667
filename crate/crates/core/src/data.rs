//! Built-in data: the ambient lattice presentation, its distinguished
//! subgroups, and the finite quotient structure used throughout the
//! pipeline. Everything here is plain text in the crate's own formats so
//! that the same data can also be loaded from files.

/// The ambient group on two generators, with the subgroups of interest:
/// `gx`, `gy` (both index 21), `gz` (normal closure of the commutators of
/// the `gx` generators), and `gw` (preimage of the order-7 rotation
/// subgroup, i.e. `gz` together with the word `t2`).
pub const AMBIENT_PRESENTATION: &str = "\
gens: z b
rel: z^7
rel: (b^-2z)^3
rel: (b^2z^-2b^2z^2)^3
rel: (b^2z^-2b^2z^4)^3
rel: b^3z^-2b^-1z^2b^-2z
rel: b^3zb^3z^3bz^2b^-1z^-1
rel: b^3z^2b^2z^-2b^-1z^-1b^-3zb^-1z^-1
sub gx: b^3; zb^3z; bz^2b^-1z
sub gy: b^3; (zbz^-1)^3; bzb^2z^-2; zbz^3b^-1
sub gz @normal-closure: (zb^3z)b^3(zb^3z)^-1b^-3; (bz^2b^-1z)b^3(bz^2b^-1z)^-1b^-3; (bz^2b^-1z)(zb^3z)(bz^2b^-1z)^-1(zb^3z)^-1
";

/// Generators of the `gx` subgroup as words in the ambient generators.
pub const GX_GENERATOR_WORDS: [&str; 3] = ["b^3", "zb^3z", "bz^2b^-1z"];

/// Generators of the `gy` subgroup as words in the ambient generators.
pub const GY_GENERATOR_WORDS: [&str; 4] =
    ["b^3", "(zbz^-1)^3", "bzb^2z^-2", "zbz^3b^-1"];

/// Words in the ambient generators mapping onto the distinguished
/// generators t1..t4 of the order-294 quotient.
pub const T_WORDS: [&str; 4] = ["b^3", "bzb^2z^-2b^3", "bz^2b^-1z", "b^4"];

/// Presentation of the order-294 group (D14 x C7) : C3 on t1..t4.
pub const QUOTIENT_294_PRESENTATION: &str = "\
gens: t1 t2 t3 t4
rel: t1^2
rel: t2^7
rel: (t1t2)^2
rel: t3^7
rel: t1t3t1^-1t3^-1
rel: t2t3t2^-1t3^-1
rel: t4^3
rel: t4t1t4^-1t1^-1
rel: t4t2t4^-1t2^-4
rel: t4t3t4^-1t3^-2
";

/// Expected index of `gx` and `gy` in the ambient group.
pub const INDEX_GX: usize = 21;
pub const INDEX_GY: usize = 21;
/// Expected index of `gz` in the ambient group.
pub const INDEX_GZ: usize = 294;
/// Order of the finite quotient by `gz`.
pub const QUOTIENT_ORDER: u64 = 294;
