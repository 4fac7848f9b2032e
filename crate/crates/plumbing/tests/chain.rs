//! The unipotent skyscraper chain.

use corelin::Matrix;
use monodromic::{Block, BlockKind, NormalForm};
use plumbing::unipotent_skyscraper_chain;

#[test]
fn length_one_has_zero_y() {
    let c = unipotent_skyscraper_chain(1, 3, 2).unwrap();
    assert!(c.verify());
    assert_eq!(c.junctions[0].can, Matrix::zeros(1, 1));
    assert_eq!(c.junctions[0].var, Matrix::identity(1));
    assert_eq!(c.junctions[1].can, Matrix::identity(1));
    assert_eq!(c.junctions[1].var, Matrix::zeros(1, 1));
}

#[test]
fn length_two_window_three() {
    let c = unipotent_skyscraper_chain(2, 3, 2).unwrap();
    let y = Matrix::from_i64_rows(&[&[0, 0], &[1, 0]]);
    assert_eq!(c.junctions.len(), 2);
    assert_eq!(c.junctions[0].can, y);
    assert_eq!(c.junctions[1].var, y);
    assert!(c.verify());
}

#[test]
fn junctions_decompose_into_single_line_blocks() {
    for length in 1..=5 {
        let c = unipotent_skyscraper_chain(length, 5, 3).unwrap();
        assert!(c.verify());
        for (junction, nf) in c.junctions.iter().zip(c.decompositions().unwrap()) {
            let kind = if junction.index < 3 { BlockKind::B } else { BlockKind::A };
            assert_eq!(nf, NormalForm::new(vec![Block::perverse(kind, length).unwrap()]), "N={length}");
        }
    }
}

#[test]
fn zero_length_is_rejected() {
    assert!(unipotent_skyscraper_chain(0, 3, 1).is_err());
}
