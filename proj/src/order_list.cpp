#include "sst/order_list.hpp"

#include <cmath>

#include "sst/common.hpp"

namespace sst {

OrderList::Handle OrderList::new_item() {
  Handle h;
  if (!free_items_.empty()) {
    h = free_items_.back();
    free_items_.pop_back();
  } else {
    h = static_cast<Handle>(items_.size());
    items_.emplace_back();
  }
  items_[h] = Item{};
  items_[h].live = true;
  ++size_;
  ++counters_.inserts;
  return h;
}

std::uint32_t OrderList::new_bucket() {
  std::uint32_t b;
  if (!free_buckets_.empty()) {
    b = free_buckets_.back();
    free_buckets_.pop_back();
  } else {
    b = static_cast<std::uint32_t>(buckets_.size());
    buckets_.emplace_back();
  }
  buckets_[b] = Bucket{};
  return b;
}

OrderList::Handle OrderList::insert_first() {
  SST_ENSURE(size_ == 0, "insert_first on a non-empty list");
  std::uint32_t b = new_bucket();
  buckets_[b].label = kSpace / 2;
  bucket_head_ = b;
  Handle h = new_item();
  items_[h].bucket = b;
  items_[h].label = kSpace / 2;
  buckets_[b].first = buckets_[b].last = h;
  buckets_[b].count = 1;
  head_ = h;
  return h;
}

// Inserts a fresh bucket after b, relabeling the smallest enclosing label
// range whose density is under the threshold for its size.
std::uint32_t OrderList::bucket_insert_after(std::uint32_t b) {
  std::uint32_t fresh = new_bucket();
  const std::uint32_t nb = buckets_[b].next;
  const std::uint64_t lo_label = buckets_[b].label;
  const std::uint64_t hi_label = nb == kNone ? kSpace : buckets_[nb].label;

  buckets_[fresh].prev = b;
  buckets_[fresh].next = nb;
  buckets_[b].next = fresh;
  if (nb != kNone) buckets_[nb].prev = fresh;

  if (hi_label - lo_label >= 2) {
    buckets_[fresh].label = lo_label + (hi_label - lo_label) / 2;
    return fresh;
  }

  // Grow a power-of-two aligned range around b until sparse enough.
  std::uint32_t left = b;
  std::uint32_t right = fresh;
  std::uint64_t count = 2;
  for (int bits = 1; bits <= 62; ++bits) {
    const std::uint64_t width = std::uint64_t{1} << bits;
    const std::uint64_t lo = lo_label & ~(width - 1);
    const std::uint64_t hi = lo + width;  // exclusive
    while (buckets_[left].prev != kNone && buckets_[buckets_[left].prev].label >= lo) {
      left = buckets_[left].prev;
      ++count;
    }
    while (buckets_[right].next != kNone && buckets_[buckets_[right].next].label < hi) {
      right = buckets_[right].next;
      ++count;
    }
    const double allowed = std::pow(2.0 / kDensityBase, bits);
    if (static_cast<double>(count) <= allowed && count < width) {
      const std::uint64_t step = width / count;
      std::uint64_t label = lo;
      for (std::uint32_t cur = left;; cur = buckets_[cur].next) {
        buckets_[cur].label = label;
        label += step;
        ++counters_.global_relabels;
        if (cur == right) break;
      }
      return fresh;
    }
  }
  SST_ENSURE(false, "order list label space exhausted");
  return fresh;
}

void OrderList::relabel_bucket(std::uint32_t b) {
  Bucket& bk = buckets_[b];
  const std::uint64_t step = kSpace / (static_cast<std::uint64_t>(bk.count) + 1);
  std::uint64_t label = step;
  for (Handle h = bk.first;; h = items_[h].next) {
    items_[h].label = label;
    label += step;
    ++counters_.local_relabels;
    if (h == bk.last) break;
  }
}

void OrderList::split_bucket(std::uint32_t b) {
  ++counters_.bucket_splits;
  std::uint32_t fresh = bucket_insert_after(b);
  Bucket& bk = buckets_[b];
  const std::uint32_t keep = bk.count / 2;
  Handle h = bk.first;
  for (std::uint32_t i = 1; i < keep; ++i) h = items_[h].next;
  const Handle moved_first = items_[h].next;
  const Handle moved_last = bk.last;

  Bucket& nb = buckets_[fresh];
  nb.first = moved_first;
  nb.last = moved_last;
  nb.count = bk.count - keep;
  bk.last = h;
  bk.count = keep;
  for (Handle m = moved_first;; m = items_[m].next) {
    items_[m].bucket = fresh;
    if (m == moved_last) break;
  }
  relabel_bucket(b);
  relabel_bucket(fresh);
}

OrderList::Handle OrderList::insert_after(Handle x) {
  SST_ENSURE(live(x), "insert_after a dead handle");
  if (buckets_[items_[x].bucket].count >= kBucketCapacity) split_bucket(items_[x].bucket);

  const std::uint32_t b = items_[x].bucket;
  const bool last_in_bucket = buckets_[b].last == x;
  auto gap_ok = [&] {
    const std::uint64_t hi = last_in_bucket ? kSpace : items_[items_[x].next].label;
    return hi - items_[x].label >= 2;
  };
  if (!gap_ok()) relabel_bucket(b);
  const std::uint64_t hi = last_in_bucket ? kSpace : items_[items_[x].next].label;
  const std::uint64_t label = items_[x].label + (hi - items_[x].label) / 2;

  Handle h = new_item();
  Item& it = items_[h];
  it.bucket = b;
  it.label = label;
  it.prev = x;
  it.next = items_[x].next;
  if (it.next != kNone) items_[it.next].prev = h;
  items_[x].next = h;
  Bucket& bk = buckets_[b];
  ++bk.count;
  if (last_in_bucket) bk.last = h;
  return h;
}

void OrderList::erase(Handle x) {
  SST_ENSURE(live(x), "erase of a dead handle");
  Item& it = items_[x];
  const std::uint32_t b = it.bucket;
  Bucket& bk = buckets_[b];

  if (it.prev != kNone) {
    items_[it.prev].next = it.next;
  } else {
    head_ = it.next;
  }
  if (it.next != kNone) items_[it.next].prev = it.prev;

  --bk.count;
  if (bk.count == 0) {
    if (bk.prev != kNone) {
      buckets_[bk.prev].next = bk.next;
    } else {
      bucket_head_ = bk.next;
    }
    if (bk.next != kNone) buckets_[bk.next].prev = bk.prev;
    free_buckets_.push_back(b);
  } else {
    if (bk.first == x) bk.first = it.next;
    if (bk.last == x) bk.last = it.prev;
  }
  it.live = false;
  it.prev = it.next = kNone;
  free_items_.push_back(x);
  --size_;
  ++counters_.erases;
}

bool OrderList::precedes(Handle a, Handle b) const {
  const Item& ia = items_[a];
  const Item& ib = items_[b];
  const std::uint64_t ba = buckets_[ia.bucket].label;
  const std::uint64_t bb = buckets_[ib.bucket].label;
  if (ba != bb) return ba < bb;
  return ia.label < ib.label;
}

}  // namespace sst
