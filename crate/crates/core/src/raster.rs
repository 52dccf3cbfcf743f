//! Binary pixmap output (P5 grayscale, P6 color). Byte output is a pure
//! function of the pixel buffer, so renders are reproducible bit-for-bit.

/// Gray level for pixels certified outside the set.
pub const GRAY_OUT: u8 = 0;
/// Gray level for pixels with no verdict.
pub const GRAY_UNKNOWN: u8 = 128;
/// Gray level for pixels witnessed inside the set.
pub const GRAY_IN: u8 = 255;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Raster {
    width: u32,
    height: u32,
    data: Vec<u8>,
}

impl Raster {
    pub fn new(width: u32, height: u32, fill: u8) -> Self {
        Self { width, height, data: vec![fill; (width as usize) * (height as usize)] }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn get(&self, x: u32, y: u32) -> u8 {
        self.data[(y as usize) * (self.width as usize) + x as usize]
    }

    pub fn set(&mut self, x: u32, y: u32, v: u8) {
        self.data[(y as usize) * (self.width as usize) + x as usize] = v;
    }

    pub fn pixels(&self) -> &[u8] {
        &self.data
    }

    pub fn pixels_mut(&mut self) -> &mut [u8] {
        &mut self.data
    }

    /// P5 binary portable graymap.
    pub fn to_pgm(&self) -> Vec<u8> {
        let mut out = format!("P5\n{} {}\n255\n", self.width, self.height).into_bytes();
        out.extend_from_slice(&self.data);
        out
    }

    /// P6 binary portable pixmap with the gray value replicated per channel.
    pub fn to_ppm(&self) -> Vec<u8> {
        let mut out = format!("P6\n{} {}\n255\n", self.width, self.height).into_bytes();
        for &v in &self.data {
            out.extend_from_slice(&[v, v, v]);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pgm_header_and_payload() {
        let mut r = Raster::new(3, 2, 0);
        r.set(2, 1, 255);
        let bytes = r.to_pgm();
        assert!(bytes.starts_with(b"P5\n3 2\n255\n"));
        assert_eq!(bytes.len(), 11 + 6);
        assert_eq!(*bytes.last().unwrap(), 255);
    }

    #[test]
    fn ppm_triples_channels() {
        let r = Raster::new(2, 2, 7);
        let bytes = r.to_ppm();
        assert!(bytes.starts_with(b"P6\n2 2\n255\n"));
        assert_eq!(bytes.len(), 11 + 12);
    }
}
