/// Resource caps and tolerances.
///
/// Every enumeration that can blow up takes its limit from here and fails
/// loudly instead of truncating. Tolerances control the floating-point side
/// of the dual-route crossing test and the geometric solver's sign tests.
#[derive(Debug, Clone, PartialEq)]
pub struct Caps {
    /// Maximum number of words a braid-move closure may contain.
    pub closure_cap: usize,
    /// Maximum exponent tried when deciding whether a product of two
    /// reflections has finite order.
    pub order_cap: usize,
    /// Maximum number of elements a ball enumeration may produce.
    pub ball_cap: usize,
    /// Maximum recursion depth for the straightening algorithm.
    pub depth_cap: usize,
    /// Tolerance on root-coordinate signs in the geometric representation.
    pub root_tol: f64,
    /// Combined length of two reflections up to which a Cross verdict is
    /// re-verified by exact group powering.
    pub exact_cross_len: usize,
    /// Combined length of two reflections up to which a Parallel verdict is
    /// re-verified by exact group powering up to the order cap.
    pub exact_parallel_len: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            closure_cap: 1_000_000,
            order_cap: 200,
            ball_cap: 1_000_000,
            depth_cap: 64,
            root_tol: 1e-9,
            exact_cross_len: 64,
            exact_parallel_len: 16,
        }
    }
}
