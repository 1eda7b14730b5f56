//! Bit-exact file formats: binary grid dumps, diagnostics CSV, ensemble CSV,
//! and the run manifest.
//!
//! Grid dump layout (all integers and floats little-endian regardless of
//! host):
//!
//! ```text
//! magic   4 bytes  "KSH1"
//! version u32      1
//! n1      u32
//! n2      u32
//! ly1     f64
//! ly2     f64
//! t       f64
//! payload n1*n2 f64, row-major with y2 varying fastest
//! ```

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::ScalarField;

pub const DUMP_MAGIC: [u8; 4] = *b"KSH1";
pub const DUMP_VERSION: u32 = 1;

/// Grid metadata stored alongside the payload.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DumpMeta {
    pub ly1: f64,
    pub ly2: f64,
    pub t: f64,
}

pub fn write_grid_dump(field: &ScalarField, meta: &DumpMeta, path: &Path) -> Result<()> {
    if !field.is_finite() {
        return Err(Error::FormatError(
            "refusing to write non-finite payload".into(),
        ));
    }
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(&DUMP_MAGIC)?;
    w.write_all(&DUMP_VERSION.to_le_bytes())?;
    w.write_all(&(field.n1() as u32).to_le_bytes())?;
    w.write_all(&(field.n2() as u32).to_le_bytes())?;
    w.write_all(&meta.ly1.to_le_bytes())?;
    w.write_all(&meta.ly2.to_le_bytes())?;
    w.write_all(&meta.t.to_le_bytes())?;
    for v in field.data() {
        w.write_all(&v.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_grid_dump(path: &Path) -> Result<(ScalarField, DumpMeta)> {
    let mut r = BufReader::new(File::open(path)?);
    let mut magic = [0u8; 4];
    read_exact(&mut r, &mut magic)?;
    if magic != DUMP_MAGIC {
        return Err(Error::FormatError(format!(
            "bad magic {magic:?}, expected {DUMP_MAGIC:?}"
        )));
    }
    let version = read_u32(&mut r)?;
    if version != DUMP_VERSION {
        return Err(Error::FormatError(format!(
            "unsupported version {version}, expected {DUMP_VERSION}"
        )));
    }
    let n1 = read_u32(&mut r)? as usize;
    let n2 = read_u32(&mut r)? as usize;
    if n1 == 0 || n2 == 0 || n1 > 1 << 20 || n2 > 1 << 20 {
        return Err(Error::FormatError(format!("implausible size {n1}x{n2}")));
    }
    let meta = DumpMeta {
        ly1: read_f64(&mut r)?,
        ly2: read_f64(&mut r)?,
        t: read_f64(&mut r)?,
    };
    let mut data = Vec::with_capacity(n1 * n2);
    for _ in 0..n1 * n2 {
        data.push(read_f64(&mut r)?);
    }
    Ok((ScalarField::from_data(n1, n2, data), meta))
}

fn read_exact(r: &mut impl Read, buf: &mut [u8]) -> Result<()> {
    r.read_exact(buf)
        .map_err(|e| Error::FormatError(format!("truncated dump: {e}")))
}

fn read_u32(r: &mut impl Read) -> Result<u32> {
    let mut b = [0u8; 4];
    read_exact(r, &mut b)?;
    Ok(u32::from_le_bytes(b))
}

fn read_f64(r: &mut impl Read) -> Result<f64> {
    let mut b = [0u8; 8];
    read_exact(r, &mut b)?;
    Ok(f64::from_le_bytes(b))
}

/// Diagnostics time-series writer with the pinned header.
pub struct DiagnosticsWriter {
    w: BufWriter<File>,
}

pub const DIAGNOSTICS_HEADER: &str =
    "t,E_kin,E_mem,E_flex,E_total,eta_min,eta_max,eta_l2,etadot_l2,grad_inf";

/// One diagnostics record.
#[derive(Debug, Clone, Copy)]
pub struct DiagRow {
    pub t: f64,
    pub e_kin: f64,
    pub e_mem: f64,
    pub e_flex: f64,
    pub e_total: f64,
    pub eta_min: f64,
    pub eta_max: f64,
    pub eta_l2: f64,
    pub etadot_l2: f64,
    pub grad_inf: f64,
}

impl DiagnosticsWriter {
    pub fn create(path: &Path) -> Result<Self> {
        let mut w = BufWriter::new(File::create(path)?);
        writeln!(w, "{DIAGNOSTICS_HEADER}")?;
        Ok(Self { w })
    }

    pub fn write_row(&mut self, r: &DiagRow) -> Result<()> {
        writeln!(
            self.w,
            "{},{},{},{},{},{},{},{},{},{}",
            r.t,
            r.e_kin,
            r.e_mem,
            r.e_flex,
            r.e_total,
            r.eta_min,
            r.eta_max,
            r.eta_l2,
            r.etadot_l2,
            r.grad_inf
        )?;
        Ok(())
    }

    /// Flushes buffered rows; partial output survives a later abort.
    pub fn flush(&mut self) -> Result<()> {
        self.w.flush()?;
        Ok(())
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    let digest = h.finalize();
    let mut s = String::with_capacity(64);
    for b in digest {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

pub fn sha256_file(path: &Path) -> Result<String> {
    let mut f = BufReader::new(File::open(path)?);
    let mut h = Sha256::new();
    let mut buf = [0u8; 8192];
    loop {
        let n = f.read(&mut buf)?;
        if n == 0 {
            break;
        }
        h.update(&buf[..n]);
    }
    let digest = h.finalize();
    let mut s = String::with_capacity(64);
    for b in digest {
        s.push_str(&format!("{b:02x}"));
    }
    Ok(s)
}

/// Collects every artifact a run produces and writes the manifest listing
/// each file with its content hash, keyed by the hash of the resolved
/// configuration.
pub struct Manifest {
    root: PathBuf,
    config_hash: String,
    entries: Vec<(String, String)>,
}

impl Manifest {
    pub fn new(root: impl Into<PathBuf>, config_hash: impl Into<String>) -> Self {
        Self {
            root: root.into(),
            config_hash: config_hash.into(),
            entries: Vec::new(),
        }
    }

    /// Registers a produced file (path relative to the output root).
    pub fn record(&mut self, rel_path: &str) -> Result<()> {
        let hash = sha256_file(&self.root.join(rel_path))?;
        self.entries.push((rel_path.to_string(), hash));
        Ok(())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn write(&self, name: &str) -> Result<PathBuf> {
        let path = self.root.join(name);
        let mut w = BufWriter::new(File::create(&path)?);
        writeln!(w, "config_hash = {}", self.config_hash)?;
        for (rel, hash) in &self.entries {
            writeln!(w, "{hash}  {rel}")?;
        }
        w.flush()?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dump_round_trip_is_bitwise() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("field.dump");
        let f = ScalarField::from_index_fn(16, 8, |i, j| {
            ((i * 31 + j * 17) as f64).sin() * 1e3 + 0.1234567890123
        });
        let meta = DumpMeta {
            ly1: 2.0 * std::f64::consts::PI,
            ly2: 4.0 * std::f64::consts::PI,
            t: 0.125,
        };
        write_grid_dump(&f, &meta, &path).unwrap();
        let (g, m2) = read_grid_dump(&path).unwrap();
        assert_eq!(meta, m2);
        assert_eq!(f.data(), g.data());
        assert_eq!(f.n1(), g.n1());
        assert_eq!(f.n2(), g.n2());
    }

    #[test]
    fn truncated_dump_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("trunc.dump");
        let f = ScalarField::constant(8, 8, 1.0);
        let meta = DumpMeta {
            ly1: 1.0,
            ly2: 1.0,
            t: 0.0,
        };
        write_grid_dump(&f, &meta, &path).unwrap();
        let bytes = std::fs::read(&path).unwrap();
        std::fs::write(&path, &bytes[..bytes.len() - 13]).unwrap();
        match read_grid_dump(&path) {
            Err(Error::FormatError(msg)) => assert!(msg.contains("truncated")),
            other => panic!("expected FormatError, got {other:?}"),
        }
    }

    #[test]
    fn bad_magic_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.dump");
        std::fs::write(&path, b"NOPE\x01\x00\x00\x00").unwrap();
        assert!(matches!(
            read_grid_dump(&path),
            Err(Error::FormatError(_))
        ));
    }

    #[test]
    fn non_finite_payload_is_rejected_on_write() {
        let dir = tempfile::tempdir().unwrap();
        let mut f = ScalarField::constant(8, 8, 1.0);
        f.data_mut()[3] = f64::NAN;
        let meta = DumpMeta {
            ly1: 1.0,
            ly2: 1.0,
            t: 0.0,
        };
        assert!(write_grid_dump(&f, &meta, &dir.path().join("nan.dump")).is_err());
    }

    #[test]
    fn manifest_lists_files_with_hashes() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("a.txt"), b"alpha").unwrap();
        std::fs::write(dir.path().join("b.txt"), b"beta").unwrap();
        let mut m = Manifest::new(dir.path(), "deadbeef");
        m.record("a.txt").unwrap();
        m.record("b.txt").unwrap();
        let path = m.write("manifest.txt").unwrap();
        let text = std::fs::read_to_string(path).unwrap();
        assert!(text.starts_with("config_hash = deadbeef\n"));
        assert_eq!(text.lines().count(), 3);
        assert!(text.contains(&sha256_hex(b"alpha")));
        assert!(text.contains(&sha256_hex(b"beta")));
    }

    #[test]
    fn diagnostics_header_is_pinned() {
        assert_eq!(
            DIAGNOSTICS_HEADER,
            "t,E_kin,E_mem,E_flex,E_total,eta_min,eta_max,eta_l2,etadot_l2,grad_inf"
        );
    }
}
