//! Minimal in-process scatter plots written as PNG.

use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

pub type Rgb = [u8; 3];

/// Colours for successive series: red, blue, green, black, magenta, then repeats.
pub const PALETTE: [Rgb; 5] = [[220, 30, 30], [30, 60, 220], [20, 150, 40], [0, 0, 0], [200, 30, 200]];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Bounds {
    /// Bounding box of the finite points, padded by 2% on each side.
    pub fn fit<'a>(points: impl IntoIterator<Item = &'a (f64, f64)>) -> Self {
        let mut b = Bounds { x_min: f64::INFINITY, x_max: f64::NEG_INFINITY, y_min: f64::INFINITY, y_max: f64::NEG_INFINITY };
        for &(x, y) in points {
            if x.is_finite() && y.is_finite() {
                b.x_min = b.x_min.min(x);
                b.x_max = b.x_max.max(x);
                b.y_min = b.y_min.min(y);
                b.y_max = b.y_max.max(y);
            }
        }
        if !b.x_min.is_finite() {
            return Bounds { x_min: -1.0, x_max: 1.0, y_min: -1.0, y_max: 1.0 };
        }
        let pad = |lo: f64, hi: f64| {
            let w = if hi > lo { hi - lo } else { 1.0 };
            (lo - 0.02 * w, hi + 0.02 * w)
        };
        (b.x_min, b.x_max) = pad(b.x_min, b.x_max);
        (b.y_min, b.y_max) = pad(b.y_min, b.y_max);
        b
    }
}

#[derive(Debug, Clone)]
pub struct Canvas {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
    bounds: Bounds,
}

impl Canvas {
    pub fn new(width: usize, height: usize, bounds: Bounds) -> Self {
        Self { width, height, pixels: vec![255; width * height * 3], bounds }
    }

    pub fn plot(&mut self, x: f64, y: f64, color: Rgb) {
        let b = self.bounds;
        let u = (x - b.x_min) / (b.x_max - b.x_min);
        let v = (b.y_max - y) / (b.y_max - b.y_min);
        if !(0.0..1.0).contains(&u) || !(0.0..1.0).contains(&v) {
            return;
        }
        let (px, py) = ((u * self.width as f64) as usize, (v * self.height as f64) as usize);
        let i = (py * self.width + px) * 3;
        self.pixels[i..i + 3].copy_from_slice(&color);
    }

    pub fn scatter<'a>(&mut self, points: impl IntoIterator<Item = &'a (f64, f64)>, color: Rgb) {
        for &(x, y) in points {
            self.plot(x, y, color);
        }
    }

    pub fn pixel(&self, px: usize, py: usize) -> Rgb {
        let i = (py * self.width + px) * 3;
        [self.pixels[i], self.pixels[i + 1], self.pixels[i + 2]]
    }

    pub fn save_png(&self, path: impl AsRef<Path>) -> std::io::Result<()> {
        let file = BufWriter::new(File::create(path.as_ref())?);
        let mut enc = png::Encoder::new(file, self.width as u32, self.height as u32);
        enc.set_color(png::ColorType::Rgb);
        enc.set_depth(png::BitDepth::Eight);
        let mut writer = enc.write_header().map_err(std::io::Error::other)?;
        writer.write_image_data(&self.pixels).map_err(std::io::Error::other)?;
        writer.finish().map_err(std::io::Error::other)
    }
}
