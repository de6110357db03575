// Reference data for the two-points-in-the-plane case: polynomial lists
// in the D[...] grammar, wedge expansions as (coefficient, wedge key)
// pairs, and the induced action matrix in the g[...] grammar.
#![allow(dead_code)]

/// The ten order-9 minors of the nine reference rows.
pub const IK_MINORS: &[&str] = &[
    "-D[1,6]*D[2,3]*D[2,4]^2*D[2,6]*D[3,5]*D[4,5]*D[4,6]^2+D[1,3]*D[1,6]*D[2,4]*D[2,6]*D[3,4]*D[3,5]*D[4,5]*D[4,6]^2+D[1,5]*D[2,3]*D[2,4]^2*D[2,6]*D[3,6]*D[4,5]*D[4,6]^2-D[1,3]*D[1,5]*D[2,4]*D[2,6]*D[3,4]*D[3,6]*D[4,5]*D[4,6]^2-D[1,6]^2*D[2,3]^2*D[2,4]*D[2,6]*D[4,5]*D[4,6]*D[5,6]+D[1,3]*D[1,6]^2*D[2,3]*D[2,4]*D[3,6]*D[4,5]*D[4,6]*D[5,6]-D[1,2]*D[1,6]*D[2,3]*D[2,6]*D[3,4]^2*D[4,6]^2*D[5,6]-D[1,2]*D[1,5]*D[2,6]*D[3,4]^3*D[4,6]^2*D[5,6]+D[1,2]*D[1,5]*D[2,4]*D[2,6]*D[3,4]*D[3,5]*D[4,6]^2*D[5,6]+D[1,2]*D[1,6]*D[2,4]*D[3,4]^2*D[3,5]*D[4,6]^2*D[5,6]-D[1,2]*D[1,6]*D[2,4]^2*D[3,5]^2*D[4,6]^2*D[5,6]+D[1,2]*D[1,6]*D[2,3]*D[2,4]*D[3,4]*D[3,6]*D[4,6]^2*D[5,6]-D[1,2]*D[2,3]*D[2,4]^2*D[3,6]*D[4,5]*D[4,6]^2*D[5,6]+D[1,2]*D[1,3]*D[2,4]*D[3,4]*D[3,6]*D[4,5]*D[4,6]^2*D[5,6]+D[1,2]*D[1,6]^2*D[2,3]*D[3,4]^2*D[4,6]*D[5,6]^2-D[1,2]*D[1,6]^2*D[2,3]*D[2,4]*D[3,5]*D[4,6]*D[5,6]^2+D[1,2]^2*D[3,4]^3*D[4,6]^2*D[5,6]^2-D[1,2]^2*D[2,4]*D[3,4]*D[3,5]*D[4,6]^2*D[5,6]^2",
    "D[1,6]*D[2,3]*D[2,4]^2*D[2,6]*D[3,5]*D[4,5]^2*D[4,6]-D[1,3]*D[1,6]*D[2,4]*D[2,6]*D[3,4]*D[3,5]*D[4,5]^2*D[4,6]-D[1,5]*D[2,3]*D[2,4]^2*D[2,6]*D[3,6]*D[4,5]^2*D[4,6]+D[1,3]*D[1,5]*D[2,4]*D[2,6]*D[3,4]*D[3,6]*D[4,5]^2*D[4,6]+D[1,6]^2*D[2,3]^2*D[2,4]*D[2,6]*D[4,5]^2*D[5,6]-D[1,3]*D[1,6]^2*D[2,3]*D[2,4]*D[3,6]*D[4,5]^2*D[5,6]+D[1,2]*D[1,6]*D[2,3]*D[2,6]*D[3,4]^2*D[4,5]*D[4,6]*D[5,6]+D[1,2]*D[1,5]*D[2,6]*D[3,4]^3*D[4,5]*D[4,6]*D[5,6]-D[1,2]*D[1,5]*D[2,4]*D[2,6]*D[3,4]*D[3,5]*D[4,5]*D[4,6]*D[5,6]-D[1,2]*D[1,6]*D[2,4]*D[3,4]^2*D[3,5]*D[4,5]*D[4,6]*D[5,6]+D[1,2]*D[1,6]*D[2,4]^2*D[3,5]^2*D[4,5]*D[4,6]*D[5,6]-D[1,2]*D[1,6]*D[2,3]*D[2,4]*D[3,4]*D[3,6]*D[4,5]*D[4,6]*D[5,6]+D[1,2]*D[2,3]*D[2,4]^2*D[3,6]*D[4,5]^2*D[4,6]*D[5,6]-D[1,2]*D[1,3]*D[2,4]*D[3,4]*D[3,6]*D[4,5]^2*D[4,6]*D[5,6]+D[1,4]*D[1,6]*D[2,3]^2*D[2,4]*D[2,6]*D[4,5]*D[5,6]^2-D[1,2]*D[1,6]^2*D[2,3]*D[3,4]^2*D[4,5]*D[5,6]^2+D[1,2]*D[1,6]^2*D[2,3]*D[2,4]*D[3,5]*D[4,5]*D[5,6]^2-D[1,3]*D[1,4]*D[1,6]*D[2,3]*D[2,4]*D[3,6]*D[4,5]*D[5,6]^2-D[1,2]^2*D[3,4]^3*D[4,5]*D[4,6]*D[5,6]^2+D[1,2]^2*D[2,4]*D[3,4]*D[3,5]*D[4,5]*D[4,6]*D[5,6]^2-D[1,2]*D[1,4]*D[1,6]*D[2,3]*D[3,4]^2*D[5,6]^3+D[1,2]*D[1,4]*D[1,6]*D[2,3]*D[2,4]*D[3,5]*D[5,6]^3",
    "-D[1,4]*D[1,6]*D[2,3]^2*D[2,4]*D[2,6]*D[4,5]*D[4,6]*D[5,6]+D[1,3]*D[1,4]*D[1,6]*D[2,3]*D[2,4]*D[3,6]*D[4,5]*D[4,6]*D[5,6]+D[1,2]*D[1,4]*D[1,6]*D[2,3]*D[3,4]^2*D[4,6]*D[5,6]^2-D[1,2]*D[1,4]*D[1,6]*D[2,3]*D[2,4]*D[3,5]*D[4,6]*D[5,6]^2",
    "D[1,4]*D[1,6]*D[2,3]^3*D[2,6]*D[4,5]*D[4,6]*D[5,6]+D[1,4]*D[1,5]*D[2,3]^2*D[2,6]*D[3,4]*D[4,5]*D[4,6]*D[5,6]-D[1,3]*D[1,4]*D[1,6]*D[2,3]*D[3,4]*D[3,5]*D[4,5]*D[4,6]*D[5,6]-D[1,3]*D[1,4]*D[1,6]*D[2,3]^2*D[3,6]*D[4,5]*D[4,6]*D[5,6]+D[1,2]*D[1,4]*D[1,6]*D[2,3]^2*D[3,5]*D[4,6]*D[5,6]^2-D[1,2]*D[1,4]*D[2,3]^2*D[3,4]*D[4,5]*D[4,6]*D[5,6]^2",
    "-D[1,4]*D[1,5]*D[2,3]^2*D[2,4]*D[2,6]*D[4,5]*D[4,6]*D[5,6]+D[1,3]*D[1,4]*D[1,6]*D[2,3]*D[2,4]*D[3,5]*D[4,5]*D[4,6]*D[5,6]-D[1,2]*D[1,4]*D[1,6]*D[2,3]^2*D[3,4]*D[4,6]*D[5,6]^2+D[1,2]*D[1,4]*D[2,3]^2*D[2,4]*D[4,5]*D[4,6]*D[5,6]^2",
    "-D[1,4]*D[1,6]*D[2,3]*D[2,4]^2*D[2,6]*D[3,5]*D[4,5]*D[4,6]+D[1,3]*D[1,4]*D[1,6]*D[2,4]*D[2,6]*D[3,4]*D[3,5]*D[4,5]*D[4,6]+D[1,4]*D[1,5]*D[2,3]*D[2,4]^2*D[2,6]*D[3,6]*D[4,5]*D[4,6]-D[1,3]*D[1,4]*D[1,5]*D[2,4]*D[2,6]*D[3,4]*D[3,6]*D[4,5]*D[4,6]-D[1,2]*D[1,4]*D[1,6]*D[2,3]*D[2,6]*D[3,4]^2*D[4,6]*D[5,6]-D[1,2]*D[1,4]*D[1,5]*D[2,6]*D[3,4]^3*D[4,6]*D[5,6]+D[1,2]*D[1,4]*D[1,5]*D[2,4]*D[2,6]*D[3,4]*D[3,5]*D[4,6]*D[5,6]+D[1,2]*D[1,4]*D[1,6]*D[2,4]*D[3,4]^2*D[3,5]*D[4,6]*D[5,6]-D[1,2]*D[1,4]*D[1,6]*D[2,4]^2*D[3,5]^2*D[4,6]*D[5,6]+D[1,2]*D[1,4]*D[1,6]*D[2,3]*D[2,4]*D[3,4]*D[3,6]*D[4,6]*D[5,6]-D[1,2]*D[1,4]*D[2,3]*D[2,4]^2*D[3,6]*D[4,5]*D[4,6]*D[5,6]+D[1,2]*D[1,3]*D[1,4]*D[2,4]*D[3,4]*D[3,6]*D[4,5]*D[4,6]*D[5,6]+D[1,2]^2*D[1,4]*D[3,4]^3*D[4,6]*D[5,6]^2-D[1,2]^2*D[1,4]*D[2,4]*D[3,4]*D[3,5]*D[4,6]*D[5,6]^2",
    "D[1,4]*D[1,6]*D[2,3]^3*D[2,6]*D[3,4]*D[4,6]*D[5,6]+D[1,4]*D[1,5]*D[2,3]^2*D[2,6]*D[3,4]^2*D[4,6]*D[5,6]-D[1,4]*D[1,5]*D[2,3]^2*D[2,4]*D[2,6]*D[3,5]*D[4,6]*D[5,6]-D[1,3]*D[1,4]*D[1,6]*D[2,3]*D[3,4]^2*D[3,5]*D[4,6]*D[5,6]+D[1,3]*D[1,4]*D[1,6]*D[2,3]*D[2,4]*D[3,5]^2*D[4,6]*D[5,6]-D[1,3]*D[1,4]*D[1,6]*D[2,3]^2*D[3,4]*D[3,6]*D[4,6]*D[5,6]-D[1,2]*D[1,4]*D[2,3]^2*D[3,4]^2*D[4,6]*D[5,6]^2+D[1,2]*D[1,4]*D[2,3]^2*D[2,4]*D[3,5]*D[4,6]*D[5,6]^2",
    "-D[1,4]*D[1,6]*D[2,3]^2*D[2,4]*D[2,6]*D[3,5]*D[4,5]*D[4,6]+D[1,4]*D[1,5]*D[2,3]^2*D[2,4]*D[2,6]*D[3,6]*D[4,5]*D[4,6]+D[1,2]*D[1,4]*D[1,6]*D[2,3]*D[3,4]^2*D[3,5]*D[4,6]*D[5,6]-D[1,2]*D[1,4]*D[1,6]*D[2,3]*D[2,4]*D[3,5]^2*D[4,6]*D[5,6]+D[1,2]*D[1,4]*D[1,6]*D[2,3]^2*D[3,4]*D[3,6]*D[4,6]*D[5,6]-D[1,2]*D[1,4]*D[2,3]^2*D[2,4]*D[3,6]*D[4,5]*D[4,6]*D[5,6]",
    "D[1,3]*D[1,4]*D[1,6]*D[2,3]*D[2,4]*D[2,6]*D[3,5]*D[4,5]*D[4,6]-D[1,3]*D[1,4]*D[1,5]*D[2,3]*D[2,4]*D[2,6]*D[3,6]*D[4,5]*D[4,6]-D[1,2]*D[1,4]*D[1,6]*D[2,3]^2*D[2,6]*D[3,4]*D[4,6]*D[5,6]-D[1,2]*D[1,4]*D[1,5]*D[2,3]*D[2,6]*D[3,4]^2*D[4,6]*D[5,6]+D[1,2]*D[1,4]*D[1,5]*D[2,3]*D[2,4]*D[2,6]*D[3,5]*D[4,6]*D[5,6]+D[1,2]*D[1,3]*D[1,4]*D[2,3]*D[2,4]*D[3,6]*D[4,5]*D[4,6]*D[5,6]+D[1,2]^2*D[1,4]*D[2,3]*D[3,4]^2*D[4,6]*D[5,6]^2-D[1,2]^2*D[1,4]*D[2,3]*D[2,4]*D[3,5]*D[4,6]*D[5,6]^2",
    "-D[1,3]*D[1,4]*D[1,6]^2*D[2,3]*D[2,4]*D[3,5]*D[4,5]*D[4,6]+D[1,3]*D[1,4]*D[1,5]*D[1,6]*D[2,3]*D[2,4]*D[3,6]*D[4,5]*D[4,6]+D[1,2]*D[1,4]*D[1,6]^2*D[2,3]^2*D[3,4]*D[4,6]*D[5,6]+D[1,2]*D[1,4]*D[1,5]*D[1,6]*D[2,3]*D[3,4]^2*D[4,6]*D[5,6]-D[1,2]*D[1,4]*D[1,5]*D[1,6]*D[2,3]*D[2,4]*D[3,5]*D[4,6]*D[5,6]-D[1,2]*D[1,4]*D[1,6]*D[2,3]^2*D[2,4]*D[4,5]*D[4,6]*D[5,6]",
];

/// The nine reference rows: (variable index, J, ten column entries).
pub const IK_MATRIX_ROWS: &[(usize, &[u32], &[&str])] = &[
    (2, &[1, 2, 6], &["D[2,6]", "-D[1,6]", "0", "0", "0", "0", "0", "D[1,2]", "0", "0"]),
    (2, &[1, 5, 6], &["D[5,6]", "0", "0", "0", "0", "-D[1,6]", "0", "D[1,5]", "0", "0"]),
    (2, &[2, 3, 4], &["0", "D[3,4]", "-D[2,4]", "0", "D[2,3]", "0", "0", "0", "0", "0"]),
    (2, &[3, 5, 6], &["0", "0", "D[5,6]", "0", "0", "-D[3,6]", "0", "D[3,5]", "0", "0"]),
    (1, &[1, 2, 3], &["0", "D[2,3]", "-D[1,3]", "D[1,2]", "0", "0", "0", "0", "0", "0"]),
    (1, &[3, 4, 5], &["0", "0", "0", "D[4,5]", "0", "-D[3,5]", "D[3,4]", "0", "0", "0"]),
    (0, &[1, 4, 6], &["0", "0", "0", "0", "D[4,6]", "0", "0", "-D[1,6]", "0", "D[1,4]"]),
    (0, &[2, 3, 4], &["0", "0", "0", "0", "0", "D[3,4]", "-D[2,4]", "D[2,3]", "0", "0"]),
    (0, &[4, 5, 6], &["0", "0", "0", "0", "0", "0", "0", "D[5,6]", "-D[4,6]", "D[4,5]"]),
];

/// The reference factor expansions: (coefficient text, wedge key).
/// `x2 δ^4_{1,2,3,4,5,6}`
pub const BAYER_FACTOR_X: &[(&str, &[u32])] = &[
    ("D[5,6]", &[1, 2, 3, 5]),
    ("-D[4,6]", &[1, 2, 3, 6]),
    ("D[4,5]", &[1, 2, 3, 8]),
    ("D[3,6]", &[1, 2, 5, 6]),
    ("-D[3,5]", &[1, 2, 5, 8]),
    ("D[3,4]", &[1, 2, 6, 8]),
    ("-D[2,6]", &[1, 3, 5, 6]),
    ("D[2,5]", &[1, 3, 5, 8]),
    ("-D[2,4]", &[1, 3, 6, 8]),
    ("D[2,3]", &[1, 5, 6, 8]),
    ("D[1,6]", &[2, 3, 5, 6]),
    ("-D[1,5]", &[2, 3, 5, 8]),
    ("D[1,4]", &[2, 3, 6, 8]),
    ("-D[1,3]", &[2, 5, 6, 8]),
    ("D[1,2]", &[3, 5, 6, 8]),
];

/// `x1 δ^2_{1,3,4,6}`
pub const BAYER_FACTOR_Y: &[(&str, &[u32])] = &[
    ("D[4,6]", &[2, 4]),
    ("-D[3,6]", &[2, 6]),
    ("D[3,4]", &[2, 9]),
    ("D[1,6]", &[4, 6]),
    ("-D[1,4]", &[4, 9]),
    ("D[1,3]", &[6, 9]),
];

/// `x0 δ^3_{2,3,4,5,6}`
pub const BAYER_FACTOR_Z: &[(&str, &[u32])] = &[
    ("D[5,6]", &[6, 7, 8]),
    ("-D[4,6]", &[6, 7, 9]),
    ("D[4,5]", &[6, 7, 10]),
    ("D[3,6]", &[6, 8, 9]),
    ("-D[3,5]", &[6, 8, 10]),
    ("D[3,4]", &[6, 9, 10]),
    ("-D[2,6]", &[7, 8, 9]),
    ("D[2,5]", &[7, 8, 10]),
    ("-D[2,4]", &[7, 9, 10]),
    ("D[2,3]", &[8, 9, 10]),
];

/// The ten reference wedge-coefficient polynomials.
pub const BAYER_COEFFS: &[&str] = &[
    "-D[2,6]^2*D[4,6]+D[2,5]*D[4,6]^2+D[1,6]*D[2,6]*D[5,6]-D[1,4]*D[5,6]^2",
    "D[2,5]*D[2,6]*D[4,6]-D[2,5]*D[4,5]*D[4,6]-D[1,6]*D[2,5]*D[5,6]",
    "-D[2,4]*D[2,6]*D[4,6]+D[1,6]*D[2,4]*D[5,6]+D[1,4]*D[4,5]*D[5,6]",
    "D[2,3]*D[2,6]*D[4,6]+D[2,5]*D[3,4]*D[4,6]-D[1,6]*D[2,3]*D[5,6]-D[1,4]*D[3,5]*D[5,6]",
    "-D[2,4]*D[2,5]*D[4,6]+D[1,4]*D[2,5]*D[5,6]",
    "D[1,6]*D[2,4]*D[4,5]+D[1,4]*D[4,5]^2+D[2,4]^2*D[4,6]-D[1,4]*D[2,5]*D[4,6]",
    "D[2,5]*D[2,6]*D[3,4]-D[2,4]*D[2,5]*D[3,6]-D[2,5]*D[3,4]*D[4,5]+D[1,3]*D[2,5]*D[5,6]",
    "D[1,6]*D[2,4]*D[3,5]-D[1,4]*D[2,5]*D[3,6]+D[1,4]*D[3,5]*D[4,5]+D[2,3]*D[2,4]*D[4,6]",
    "-D[1,6]*D[2,4]*D[2,5]+D[1,4]*D[2,5]*D[2,6]-D[1,4]*D[2,5]*D[4,5]",
    "D[1,5]*D[1,6]*D[2,4]-D[1,4]*D[1,6]*D[2,5]+D[1,4]*D[1,5]*D[4,5]-D[1,2]*D[2,4]*D[4,6]",
];

/// The twelve reference first-family polynomials.
pub const T1_POLYS: &[&str] = &[
    "-D[2,6]*D[4,6]+D[4,5]*D[4,6]+D[1,6]*D[5,6]",
    "-D[4,5]^2+D[2,5]*D[4,6]-D[1,5]*D[5,6]",
    "-D[2,4]*D[4,6]+D[1,4]*D[5,6]",
    "D[3,4]*D[4,5]+D[2,3]*D[4,6]-D[1,3]*D[5,6]",
    "-D[2,4]*D[4,5]+D[1,2]*D[5,6]",
    "D[1,4]*D[4,5]-D[1,2]*D[4,6]",
    "-D[3,6]*D[4,6]+D[2,6]*D[5,6]+D[4,5]*D[5,6]",
    "D[3,5]*D[4,6]-D[2,5]*D[5,6]",
    "-D[4,5]^2-D[3,4]*D[4,6]+D[2,4]*D[5,6]",
    "D[3,5]*D[4,5]-D[2,3]*D[5,6]",
    "-D[2,5]*D[4,5]+D[2,3]*D[4,6]",
    "D[1,5]*D[4,5]-D[1,3]*D[4,6]+D[1,2]*D[5,6]",
];

/// The thirty-six reference second-family polynomials.
pub const T2_POLYS: &[&str] = &[
    "D[1,6]*D[2,5]-D[1,5]*D[2,6]-D[2,4]*D[2,6]+D[1,4]*D[3,6]",
    "D[2,4]*D[2,5]-D[1,4]*D[3,5]",
    "-D[1,5]*D[2,4]-D[2,4]^2+D[1,4]*D[2,5]+D[1,4]*D[3,4]",
    "D[1,5]*D[2,3]+D[2,3]*D[2,4]-D[1,3]*D[2,5]",
    "-D[1,4]*D[2,3]+D[1,2]*D[2,5]",
    "D[1,3]*D[1,4]-D[1,2]*D[1,5]-D[1,2]*D[2,4]",
    "-D[2,5]*D[2,6]-D[2,6]*D[3,4]+D[1,6]*D[3,5]+D[2,4]*D[3,6]",
    "D[2,5]^2+D[2,5]*D[3,4]-D[1,5]*D[3,5]-D[2,4]*D[3,5]",
    "-D[2,4]*D[2,5]+D[1,4]*D[3,5]",
    "D[2,3]*D[2,5]+D[2,3]*D[3,4]-D[1,3]*D[3,5]",
    "-D[2,3]*D[2,4]+D[1,2]*D[3,5]",
    "D[1,3]*D[2,4]-D[1,2]*D[2,5]-D[1,2]*D[3,4]",
    "-D[2,4]*D[4,6]+D[1,4]*D[5,6]",
    "D[1,6]*D[2,5]-D[1,5]*D[2,6]+D[2,4]*D[4,5]",
    "-D[1,6]*D[2,4]+D[1,4]*D[2,6]-D[1,4]*D[4,5]",
    "D[1,6]*D[2,3]-D[1,3]*D[2,6]-D[2,4]*D[3,4]+D[1,4]*D[3,5]",
    "D[2,4]^2-D[1,4]*D[2,5]+D[1,2]*D[2,6]",
    "D[1,4]*D[1,5]-D[1,2]*D[1,6]-D[1,4]*D[2,4]",
    "-D[2,6]^2+D[1,6]*D[3,6]-D[3,4]*D[4,6]+D[2,4]*D[5,6]",
    "D[2,5]*D[2,6]-D[1,5]*D[3,6]+D[3,4]*D[4,5]",
    "-D[2,4]*D[2,6]+D[1,4]*D[3,6]-D[2,4]*D[4,5]",
    "D[2,3]*D[2,6]-D[3,4]^2+D[2,4]*D[3,5]-D[1,3]*D[3,6]",
    "-D[2,4]*D[2,5]+D[2,4]*D[3,4]+D[1,2]*D[3,6]",
    "D[1,5]*D[2,4]-D[1,2]*D[2,6]-D[1,4]*D[3,4]",
    "D[2,6]^2-D[1,6]*D[3,6]-D[2,5]*D[4,6]+D[1,5]*D[5,6]",
    "-D[2,5]*D[2,6]+D[1,6]*D[3,5]+D[2,5]*D[4,5]",
    "D[2,4]*D[2,6]-D[1,6]*D[3,4]-D[1,5]*D[4,5]",
    "-D[2,3]*D[2,6]-D[2,5]*D[3,4]+D[1,5]*D[3,5]",
    "D[1,6]*D[2,3]-D[1,5]*D[2,5]+D[2,4]*D[2,5]",
    "D[1,5]^2-D[1,3]*D[1,6]-D[1,4]*D[2,5]+D[1,2]*D[2,6]",
    "-D[3,5]*D[4,6]+D[2,5]*D[5,6]",
    "D[2,6]*D[3,5]-D[2,5]*D[3,6]+D[3,5]*D[4,5]",
    "-D[2,6]*D[3,4]+D[2,4]*D[3,6]-D[2,5]*D[4,5]",
    "D[2,5]*D[3,5]-D[3,4]*D[3,5]-D[2,3]*D[3,6]",
    "-D[2,5]^2+D[2,3]*D[2,6]+D[2,4]*D[3,5]",
    "D[1,5]*D[2,5]-D[1,3]*D[2,6]-D[1,4]*D[3,5]+D[1,2]*D[3,6]",
];

/// The reference induced action matrix on the quadric basis.
pub const PGL_ACTION_MATRIX: &[&[&str]] = &[
    &["g[1,1]^2", "2*g[1,1]*g[1,2]", "g[1,2]^2", "2*g[1,1]*g[1,3]", "2*g[1,2]*g[1,3]", "g[1,3]^2"],
    &["g[1,1]*g[2,1]", "g[1,2]*g[2,1]+g[1,1]*g[2,2]", "g[1,2]*g[2,2]", "g[1,3]*g[2,1]+g[1,1]*g[2,3]", "g[1,3]*g[2,2]+g[1,2]*g[2,3]", "g[1,3]*g[2,3]"],
    &["g[2,1]^2", "2*g[2,1]*g[2,2]", "g[2,2]^2", "2*g[2,1]*g[2,3]", "2*g[2,2]*g[2,3]", "g[2,3]^2"],
    &["g[1,1]*g[3,1]", "g[1,2]*g[3,1]+g[1,1]*g[3,2]", "g[1,2]*g[3,2]", "g[1,3]*g[3,1]+g[1,1]*g[3,3]", "g[1,3]*g[3,2]+g[1,2]*g[3,3]", "g[1,3]*g[3,3]"],
    &["g[2,1]*g[3,1]", "g[2,2]*g[3,1]+g[2,1]*g[3,2]", "g[2,2]*g[3,2]", "g[2,3]*g[3,1]+g[2,1]*g[3,3]", "g[2,3]*g[3,2]+g[2,2]*g[3,3]", "g[2,3]*g[3,3]"],
    &["g[3,1]^2", "2*g[3,1]*g[3,2]", "g[3,2]^2", "2*g[3,1]*g[3,3]", "2*g[3,2]*g[3,3]", "g[3,3]^2"],
];

