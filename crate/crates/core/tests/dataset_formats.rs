use std::io::Write;

use dcx_core::datasets::{parse_cifar10, parse_idx, parse_planar_records, read_maybe_gz, IdxTensor};
use dcx_core::Error;
use flate2::{write::GzEncoder, Compression};

#[test]
fn idx_round_trip_byte_identity() {
    let cases = [
        IdxTensor { dims: vec![], data: vec![42] },
        IdxTensor { dims: vec![5], data: (0..5).collect() },
        IdxTensor { dims: vec![3, 4, 2], data: (0..24).map(|i| i * 10).collect() },
    ];
    for t in cases {
        let bytes = t.to_bytes();
        let back = parse_idx(&bytes).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_bytes(), bytes);
    }
}

#[test]
fn gzipped_idx_decodes() {
    let dir = tempfile::tempdir().unwrap();
    let t = IdxTensor { dims: vec![2, 2], data: vec![1, 2, 3, 4] };
    let mut enc = GzEncoder::new(Vec::new(), Compression::default());
    enc.write_all(&t.to_bytes()).unwrap();
    let path = dir.path().join("x-idx2-ubyte");
    std::fs::write(path.with_extension("gz"), enc.finish().unwrap()).unwrap();
    std::fs::rename(path.with_extension("gz"), dir.path().join("x-idx2-ubyte.gz")).unwrap();
    assert_eq!(parse_idx(&read_maybe_gz(&path).unwrap()).unwrap(), t);
}

#[test]
fn planar_record_unscrambling() {
    // label 2, then R plane [1 2 / 3 4], G plane [5 6 / 7 8], B plane [9 10 / 11 12]
    let rec = [2u8, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12];
    let names = (0..3).map(|i| i.to_string()).collect();
    let d = parse_planar_records(&rec, 2, 2, 3, names).unwrap();
    assert_eq!(d.labels, vec![2]);
    assert_eq!(d.image(0), &[1, 5, 9, 2, 6, 10, 3, 7, 11, 4, 8, 12]);
    assert_eq!(d.channel(0, 2).unwrap(), vec![9, 10, 11, 12]);
}

#[test]
fn cifar_batch_with_two_records() {
    let mut bytes = Vec::new();
    for label in [9u8, 0] {
        bytes.push(label);
        bytes.extend((0..3072).map(|i| (i / 1024) as u8 * 100 + label));
    }
    let d = parse_cifar10(&bytes).unwrap();
    assert_eq!(d.labels, vec![9, 0]);
    assert_eq!(&d.image(0)[..3], &[9, 109, 209]);
    assert_eq!(&d.image(1)[..3], &[0, 100, 200]);
    assert_eq!(d.class_names[9], "truck");
    assert!(matches!(parse_cifar10(&bytes[..6000]), Err(Error::TruncatedInput(_))));
}
