//! Reference character grids for the scheme classes. Shapes and classes are
//! given by their parts after the first; the first part is whatever makes
//! the total `n`.

pub struct Grid {
    pub classes: &'static [&'static [u32]],
    pub rows: &'static [(&'static [u32], &'static [i128])],
}

/// k = 3, n even: the three even classes of the scheme.
pub const K3_EVEN: Grid = Grid {
    classes: &[&[5], &[2, 2, 2], &[4, 1, 1]],
    rows: &[
        (&[], &[1, 1, 1]),
        (&[1], &[-1, -1, 1]),
        (&[2], &[0, 3, -1]),
        (&[1, 1], &[1, -2, 0]),
        (&[3], &[0, -3, -1]),
        (&[2, 1], &[0, 0, 0]),
        (&[1, 1, 1], &[-1, 2, 0]),
        (&[4], &[0, 3, 1]),
        (&[1, 1, 1, 1], &[1, 1, -1]),
    ],
};

/// k = 4, n even.
pub const K4_EVEN: Grid = Grid {
    classes: &[&[1], &[2], &[3], &[1, 1, 1], &[5, 1, 1]],
    rows: &[
        (&[], &[1, 1, 1, 1, 1]),
        (&[1], &[0, -1, -1, 2, 1]),
        (&[2], &[-1, 1, 0, 0, -1]),
        (&[1, 1], &[0, 0, 1, 1, 0]),
        (&[3], &[0, -1, 1, -2, -1]),
        (&[2, 1], &[1, 0, -1, -1, 0]),
        (&[1, 1, 1], &[0, 0, 0, 0, 0]),
        (&[4], &[0, 0, -1, -1, 0]),
        (&[1, 1, 1, 1], &[0, 0, 0, 0, 0]),
        (&[3, 1], &[0, 1, 0, 0, 1]),
        (&[2, 2], &[0, -1, 1, 1, 1]),
        (&[2, 1, 1], &[-1, 0, 0, 0, 0]),
        (&[5], &[0, 0, 0, 0, 1]),
        (&[1, 1, 1, 1, 1], &[0, 0, 0, 0, 1]),
    ],
};

/// k = 4, n odd.
pub const K4_ODD: Grid = Grid {
    classes: &[&[], &[1, 1], &[2, 1], &[3, 3], &[6, 1], &[6, 1, 1, 1]],
    rows: &[
        (&[], &[1, 1, 1, 1, 1, 1]),
        (&[1], &[-1, 1, 0, -1, 0, 2]),
        (&[2], &[0, -1, 0, 0, -1, 0]),
        (&[1, 1], &[1, 0, -1, 1, 0, 1]),
        (&[3], &[0, -1, 0, 2, 0, -2]),
        (&[2, 1], &[0, 0, 1, -2, 1, -1]),
        (&[1, 1, 1], &[-1, 0, 0, 1, 0, 0]),
        (&[4], &[0, 0, -1, -2, 0, -1]),
        (&[1, 1, 1, 1], &[1, 0, 0, -1, 0, 0]),
        (&[3, 1], &[0, 1, 0, 0, 0, 0]),
        (&[2, 2], &[0, 1, -1, 2, 0, 1]),
        (&[2, 1, 1], &[0, 0, 0, 0, -1, 0]),
        (&[5], &[0, 0, 0, 0, 0, 0]),
        (&[1, 1, 1, 1, 1], &[-1, 0, 0, 1, 0, 0]),
    ],
};

/// k = 5, n even.
pub const K5_EVEN: Grid = Grid {
    classes: &[&[1], &[2], &[1, 1, 1], &[4], &[2, 1, 1], &[6], &[2, 2, 2], &[3, 3, 1], &[6, 1, 1], &[6, 1, 1, 1, 1]],
    rows: &[
        (&[], &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
        (&[1], &[0, -1, 2, -1, 1, -1, -1, 0, 1, 3]),
        (&[2], &[-1, 1, 0, 0, 0, 0, 3, -1, -1, 2]),
        (&[1, 1], &[0, 0, 1, 1, -1, 1, -2, 0, 0, 3]),
        (&[3], &[0, -1, -2, 0, 0, 0, -3, 2, -1, -2]),
        (&[2, 1], &[1, 0, -1, 0, 0, 0, 0, -1, 0, 0]),
        (&[1, 1, 1], &[0, 0, 0, -1, -1, -1, 2, 2, 0, 1]),
        (&[4], &[0, 0, -1, 1, -1, 0, 3, 0, 0, -3]),
        (&[1, 1, 1, 1], &[0, 0, 0, 0, 0, 1, 1, 0, 0, 0]),
        (&[3, 1], &[0, 1, 0, -1, 1, 0, 0, 0, 1, -3]),
        (&[2, 2], &[0, -1, 1, 0, 0, 0, 3, 0, 1, 0]),
        (&[2, 1, 1], &[-1, 0, 0, 1, 1, 0, -3, -1, 0, -1]),
        (&[5], &[0, 0, 0, -1, -1, 0, -3, -2, 0, -1]),
        (&[1, 1, 1, 1, 1], &[0, 0, 0, 0, 0, -1, -1, 0, 0, 0]),
        (&[4, 1], &[0, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
        (&[3, 2], &[0, 0, 2, 1, -1, 0, -3, 0, 0, 3]),
        (&[3, 1, 1], &[0, -1, 0, 0, 0, 0, 3, 0, -1, 0]),
        (&[2, 2, 1], &[0, 1, 0, -1, -1, 0, 0, 2, -1, 1]),
        (&[2, 1, 1, 1], &[1, 0, 0, 0, 0, 0, 0, -1, 0, 0]),
        (&[6], &[0, 0, 0, 0, 0, 1, 1, 1, 1, 1]),
        (&[1, 1, 1, 1, 1, 1], &[0, 0, 0, 0, 0, 0, 0, 1, -1, -1]),
    ],
};

/// k = 5, n odd.
pub const K5_ODD: Grid = Grid {
    classes: &[&[], &[1, 1], &[2, 1], &[2, 2], &[1, 1, 1, 1], &[3, 1], &[6, 1], &[4, 4], &[6, 1, 1, 1]],
    rows: &[
        (&[], &[1, 1, 1, 1, 1, 1, 1, 1, 1]),
        (&[1], &[-1, 1, 0, -1, 3, 0, 0, -1, 2]),
        (&[2], &[0, -1, 0, 2, 2, -1, -1, 0, 0]),
        (&[1, 1], &[1, 0, -1, -1, 3, 0, 0, 1, 1]),
        (&[3], &[0, -1, 0, -2, -2, 1, 0, 0, -2]),
        (&[2, 1], &[0, 0, 1, 0, 0, 0, 1, 0, -1]),
        (&[1, 1, 1], &[-1, 0, 0, 1, 1, 1, 0, -1, 0]),
        (&[4], &[0, 0, -1, 1, -3, 0, 0, 2, -1]),
        (&[1, 1, 1, 1], &[1, 0, 0, 0, 0, 0, 0, -1, 0]),
        (&[3, 1], &[0, 1, 0, 1, -3, 0, 0, -2, 0]),
        (&[2, 2], &[0, 1, -1, 0, 0, 0, 0, 0, 1]),
        (&[2, 1, 1], &[0, 0, 0, -1, -1, -1, -1, 2, 0]),
        (&[5], &[0, 0, 0, -1, -1, -1, 0, -2, 0]),
        (&[1, 1, 1, 1, 1], &[-1, 0, 0, 0, 0, 0, 0, 1, 0]),
        (&[4, 1], &[0, 0, 1, 0, 0, 0, 0, 0, 1]),
        (&[3, 2], &[0, 0, 0, -1, 3, 0, 0, 2, 2]),
        (&[3, 1, 1], &[0, -1, 0, 0, 0, 0, 0, 0, 0]),
        (&[2, 2, 1], &[0, -1, 0, 1, 1, 1, 0, -2, 0]),
        (&[2, 1, 1, 1], &[0, 0, 0, 0, 0, 0, 1, 0, 0]),
        (&[6], &[0, 0, 0, 0, 0, 0, 1, 0, 1]),
        (&[1, 1, 1, 1, 1, 1], &[1, 0, 0, 0, 0, 0, -1, -1, -1]),
    ],
};
