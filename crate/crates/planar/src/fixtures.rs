//! Hand-curated cycle systems for the catalog samples, in orderings that the
//! walkthrough material and regression tests rely on.

/// The 17 isometric cycles of `catalog::sample_11_20`, as edge-id lists.
pub fn sample_11_20_cycles() -> Vec<Vec<usize>> {
    vec![
        vec![1, 3, 5, 11],
        vec![1, 4, 6, 16],
        vec![2, 3, 7, 9],
        vec![2, 3, 8, 13],
        vec![2, 4, 8, 14],
        vec![3, 4, 13, 14],
        vec![5, 6, 12, 14, 16],
        vec![5, 6, 12, 15, 19],
        vec![7, 8, 10],
        vec![9, 10, 13],
        vec![11, 12, 13],
        vec![1, 2, 5, 8, 12],
        vec![1, 4, 5, 12, 14],
        vec![14, 15, 16, 19],
        vec![14, 15, 17, 20],
        vec![16, 17, 18],
        vec![18, 19, 20],
    ]
}

/// The 14 isometric cycles of `catalog::sample_14_21`.
pub fn sample_14_21_cycles() -> Vec<Vec<usize>> {
    vec![
        vec![1, 2, 5, 14, 15],
        vec![1, 3, 4, 7, 20],
        vec![2, 3, 12, 13, 19],
        vec![4, 5, 6, 9, 17],
        vec![6, 7, 8, 11, 21],
        vec![8, 9, 10, 13, 18],
        vec![10, 11, 12, 14, 16],
        vec![8, 9, 11, 15, 16, 17],
        vec![4, 5, 7, 15, 16, 21],
        vec![12, 13, 14, 15, 17, 18],
        vec![1, 3, 5, 17, 18, 19],
        vec![6, 7, 9, 18, 19, 20],
        vec![10, 11, 13, 19, 20, 21],
        vec![2, 3, 14, 16, 20, 21],
    ]
}

/// The 19 isometric cycles of `catalog::sample_9_20`.
pub fn sample_9_20_cycles() -> Vec<Vec<usize>> {
    vec![
        vec![1, 2, 6],
        vec![1, 3, 7],
        vec![1, 4, 8, 19],
        vec![2, 3, 10],
        vec![2, 5, 11, 20],
        vec![3, 4, 15],
        vec![3, 5, 17],
        vec![4, 5, 18],
        vec![6, 7, 10],
        vec![6, 8, 9, 14],
        vec![7, 8, 12, 14],
        vec![7, 8, 15, 19],
        vec![9, 10, 12],
        vec![9, 11, 13],
        vec![10, 11, 16],
        vec![12, 13, 16],
        vec![12, 14, 15, 19],
        vec![15, 17, 18],
        vec![16, 17, 20],
    ]
}

/// The 20 isometric cycles of `catalog::sample_13_22`.
pub fn sample_13_22_cycles() -> Vec<Vec<usize>> {
    vec![
        vec![1, 2, 4, 5],
        vec![1, 3, 8, 9, 13, 16],
        vec![1, 3, 9, 10, 14, 16],
        vec![2, 3, 12, 16],
        vec![2, 3, 17, 18],
        vec![4, 6, 8, 9],
        vec![4, 7, 9, 11],
        vec![5, 6, 12, 13],
        vec![5, 7, 18, 19, 21, 22],
        vec![6, 7, 8, 11],
        vec![5, 7, 12, 15, 21, 22],
        vec![5, 7, 12, 14, 20, 21],
        vec![8, 10, 13, 14],
        vec![1, 2, 9, 10, 12, 14],
        vec![10, 11, 20, 21],
        vec![12, 16, 17, 18],
        vec![12, 15, 18, 19],
        vec![14, 15, 20, 22],
        vec![15, 16, 17, 19],
        vec![6, 7, 13, 15, 21, 22],
    ]
}

/// A fixed spanning tree of `catalog::sample_13_22` used by the structural
/// number walkthrough: tree edges, then chords.
pub fn sample_13_22_tree() -> Vec<usize> {
    vec![1, 4, 5, 8, 10, 12, 13, 17, 19, 20, 21, 22]
}

/// Eighteen cycles of `catalog::sample_21_33` used by the structural-number
/// walkthrough (a curated subset of its isometric cycles).
pub fn sample_21_33_cycles() -> Vec<Vec<usize>> {
    vec![
        vec![1, 3, 16, 30],
        vec![1, 4, 13, 15, 17, 31],
        vec![1, 2, 16, 24, 26, 27],
        vec![2, 3, 23, 29],
        vec![2, 4, 24, 25, 27, 31],
        vec![1, 4, 16, 25, 26, 31],
        vec![3, 4, 25, 26, 30, 31],
        vec![5, 6, 10, 11],
        vec![5, 7, 12, 14, 32],
        vec![5, 8, 12, 13, 31],
        vec![6, 7, 33],
        vec![9, 10, 12, 15, 21, 28],
        vec![13, 15, 16, 17, 25, 26],
        vec![14, 15, 18, 19, 28],
        vec![18, 20, 21, 22, 23, 24],
        vec![9, 10, 12, 13, 22, 25, 27],
        vec![2, 3, 24, 26, 27, 30],
        vec![23, 24, 26, 27, 29, 30],
    ]
}

/// A fixed spanning tree of `catalog::sample_21_33`; the complement chords
/// drive the structural-number independence check.
pub fn sample_21_33_tree() -> Vec<usize> {
    vec![
        1, 5, 6, 8, 9, 11, 12, 13, 16, 18, 19, 20, 21, 23, 24, 25, 26, 28, 29, 32,
    ]
}

/// Face system of the embedded part of `catalog::sample_7_14`: seven inner
/// faces followed by the rim, as vertex walks.
pub fn sample_7_14_faces() -> Vec<Vec<usize>> {
    vec![
        vec![3, 4, 5],
        vec![1, 3, 5],
        vec![1, 5, 6, 2],
        vec![2, 6, 7],
        vec![4, 6, 5],
        vec![1, 2, 3],
        vec![2, 7, 3],
        vec![3, 7, 6, 4],
    ]
}

/// Plane part of `catalog::sample_45_72`: fourteen kept cycles and the rim,
/// as vertex walks.
pub fn sample_45_72_plane_part() -> (Vec<Vec<usize>>, Vec<usize>) {
    let kept = vec![
        vec![29, 34, 38, 33, 12],
        vec![4, 24, 6, 18],
        vec![1, 35, 8, 29, 12, 31, 7, 30],
        vec![42, 45, 3],
        vec![8, 32, 10, 34, 29],
        vec![1, 30, 7, 27, 23, 3, 19],
        vec![6, 21, 36, 14, 39, 13],
        vec![23, 27, 9, 26, 2],
        vec![3, 45, 16, 37, 17, 41, 19],
        vec![25, 44, 15, 42, 3],
        vec![19, 41, 17, 43, 11, 35, 1],
        vec![20, 40, 22, 36, 21, 5],
        vec![2, 26, 5, 21, 6, 24],
        vec![14, 36, 22, 40, 28],
    ];
    let rim = vec![
        33, 38, 34, 10, 32, 8, 35, 11, 43, 17, 37, 16, 45, 42, 15, 44, 25, 3, 23, 2, 24, 4, 18, 6,
        13, 39, 14, 28, 40, 20, 5, 26, 9, 27, 7, 31, 12,
    ];
    (kept, rim)
}

/// Face system of the embedded 31-vertex layout sample: eighteen inner faces
/// and the rim, as vertex walks.
pub fn sample_31_147_faces() -> Vec<Vec<usize>> {
    vec![
        vec![2, 3, 4, 5, 1],
        vec![10, 6, 11, 3, 2],
        vec![6, 7, 8, 9, 18, 17, 11],
        vec![10, 13, 12, 7, 6],
        vec![31, 25, 26, 8, 7, 12, 14],
        vec![14, 12, 13, 15],
        vec![28, 27, 15, 13, 10],
        vec![3, 11, 17, 16, 4],
        vec![5, 4, 16, 20, 21],
        vec![23, 20, 16, 17, 18, 19],
        vec![24, 19, 18, 9, 30],
        vec![26, 30, 9, 8],
        vec![31, 1, 5, 21, 22],
        vec![31, 22, 23, 19, 24, 25],
        vec![25, 24, 30, 26],
        vec![22, 21, 20, 23],
        vec![31, 14, 15, 27, 29],
        vec![29, 27, 28],
        vec![31, 29, 28, 10, 2, 1],
    ]
}
