//! A simulated random-access memory: one flat byte array, first-fit
//! allocation, and a translation window for absolute addresses that lie
//! beyond the array.

use thiserror::Error;

pub const DEFAULT_HEAP_SIZE: usize = 1 << 20;
pub const WINDOW_SIZE: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeapError {
    #[error("cannot allocate {size} bytes: out of capacity ({free} of {capacity} free in one piece)")]
    OutOfCapacity {
        size: u64,
        free: u64,
        capacity: u64,
    },
    #[error("allocation size must be positive, got {0}")]
    BadSize(i64),
    #[error("double free of the allocation at address {0}")]
    DoubleFree(u64),
    #[error("access of {len} byte(s) at address {addr} is out of bounds")]
    OutOfBounds { addr: u64, len: u64 },
    #[error("access of {len} byte(s) at address {addr} touches freed memory")]
    UseAfterFree { addr: u64, len: u64 },
    #[error("address {0} is negative")]
    NegativeAddress(i64),
    #[error("{len} byte(s) do not fit a {capacity}-byte block")]
    TooLong { len: u64, capacity: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AllocId(usize);

#[derive(Debug, Clone)]
struct Allocation {
    base: u64,
    len: u64,
    live: bool,
    window: bool,
}

#[derive(Debug, Clone)]
struct Window {
    /// First absolute address covered.
    lo: u64,
    /// Where the window lives in the byte array.
    offset: u64,
}

#[derive(Debug, Clone)]
pub struct HeapStore {
    bytes: Vec<u8>,
    allocs: Vec<Allocation>,
    window: Option<Window>,
}

impl HeapStore {
    pub fn new(capacity: usize) -> Self {
        HeapStore {
            bytes: vec![0; capacity],
            allocs: Vec::new(),
            window: None,
        }
    }

    pub fn capacity(&self) -> u64 {
        self.bytes.len() as u64
    }

    pub fn malloc(&mut self, size: i64) -> Result<AllocId, HeapError> {
        if size <= 0 {
            return Err(HeapError::BadSize(size));
        }
        self.allocate(size as u64, false)
    }

    fn allocate(&mut self, size: u64, window: bool) -> Result<AllocId, HeapError> {
        let mut live: Vec<(u64, u64)> = self
            .allocs
            .iter()
            .filter(|a| a.live)
            .map(|a| (a.base, a.base + a.len))
            .collect();
        live.sort_unstable();
        let mut cursor = 0u64;
        let mut largest = 0u64;
        let mut found = None;
        for (start, end) in live.iter().copied().chain(std::iter::once((self.capacity(), self.capacity()))) {
            let gap = start.saturating_sub(cursor);
            if gap >= size {
                found = Some(cursor);
                break;
            }
            largest = largest.max(gap);
            cursor = cursor.max(end);
        }
        let base = found.ok_or(HeapError::OutOfCapacity {
            size,
            free: largest,
            capacity: self.capacity(),
        })?;
        self.bytes[base as usize..(base + size) as usize].fill(0);
        self.allocs.push(Allocation {
            base,
            len: size,
            live: true,
            window,
        });
        Ok(AllocId(self.allocs.len() - 1))
    }

    pub fn free(&mut self, id: AllocId) -> Result<(), HeapError> {
        let alloc = &mut self.allocs[id.0];
        if !alloc.live {
            return Err(HeapError::DoubleFree(alloc.base));
        }
        alloc.live = false;
        Ok(())
    }

    pub fn base(&self, id: AllocId) -> u64 {
        self.allocs[id.0].base
    }

    pub fn len(&self, id: AllocId) -> u64 {
        self.allocs[id.0].len
    }

    pub fn is_live(&self, id: AllocId) -> bool {
        self.allocs[id.0].live
    }

    pub fn live_allocations(&self) -> usize {
        self.allocs.iter().filter(|a| a.live && !a.window).count()
    }

    /// Makes an absolute address usable. Addresses inside the array are
    /// used as they are; the first address beyond it opens a window of
    /// [`WINDOW_SIZE`] bytes centered on it.
    pub fn map_absolute(&mut self, addr: i64) -> Result<(), HeapError> {
        if addr < 0 {
            return Err(HeapError::NegativeAddress(addr));
        }
        let addr = addr as u64;
        if addr < self.capacity() || self.window.is_some() {
            return Ok(());
        }
        let id = self.allocate(WINDOW_SIZE, true)?;
        let lo = addr.saturating_sub(WINDOW_SIZE / 2).max(self.capacity());
        self.window = Some(Window {
            lo,
            offset: self.allocs[id.0].base,
        });
        Ok(())
    }

    fn translate(&self, addr: i64, len: u64) -> Result<usize, HeapError> {
        if addr < 0 {
            return Err(HeapError::NegativeAddress(addr));
        }
        let addr = addr as u64;
        let end = addr.checked_add(len).ok_or(HeapError::OutOfBounds { addr, len })?;
        if let Some(w) = &self.window {
            if addr >= w.lo && end <= w.lo + WINDOW_SIZE {
                return Ok((w.offset + addr - w.lo) as usize);
            }
        }
        let inside = |a: &&Allocation| !a.window && a.base <= addr && end <= a.base + a.len;
        if self.allocs.iter().filter(|a| a.live).any(|a| inside(&a)) {
            return Ok(addr as usize);
        }
        if self.allocs.iter().filter(|a| !a.live).any(|a| inside(&a)) {
            return Err(HeapError::UseAfterFree { addr, len });
        }
        Err(HeapError::OutOfBounds { addr, len })
    }

    pub fn read(&self, addr: i64, len: u64) -> Result<Vec<u8>, HeapError> {
        let at = self.translate(addr, len)?;
        Ok(self.bytes[at..at + len as usize].to_vec())
    }

    pub fn write(&mut self, addr: i64, data: &[u8]) -> Result<(), HeapError> {
        let at = self.translate(addr, data.len() as u64)?;
        self.bytes[at..at + data.len()].copy_from_slice(data);
        Ok(())
    }
}
