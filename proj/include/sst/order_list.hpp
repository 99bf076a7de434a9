#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sst {

// Order-maintenance list: insert-after, erase and O(1) order comparison.
//
// Two levels. Items live in buckets of at most kBucketCapacity entries with
// 62-bit local labels; buckets carry 62-bit global labels maintained by
// density-based range relabeling. A local relabel touches one bucket, a
// bucket split happens at most once per ~kBucketCapacity/2 insertions, so the
// amortized cost per insertion is O(1).
class OrderList {
 public:
  using Handle = std::uint32_t;
  static constexpr Handle kNone = 0xFFFFFFFFu;

  struct Counters {
    std::uint64_t inserts = 0;
    std::uint64_t erases = 0;
    std::uint64_t local_relabels = 0;   // items touched by bucket relabels
    std::uint64_t bucket_splits = 0;
    std::uint64_t global_relabels = 0;  // buckets touched by range relabels
  };

  // Insert as the only element; list must be empty.
  Handle insert_first();
  Handle insert_after(Handle x);
  void erase(Handle x);

  // Strict order comparison.
  bool precedes(Handle a, Handle b) const;

  Handle first() const { return head_; }
  Handle next(Handle x) const { return items_[x].next; }
  bool live(Handle x) const { return x < items_.size() && items_[x].live; }
  std::size_t size() const { return size_; }

  const Counters& counters() const { return counters_; }

 private:
  static constexpr std::uint64_t kSpace = std::uint64_t{1} << 62;
  static constexpr std::uint32_t kBucketCapacity = 64;
  static constexpr double kDensityBase = 1.5;

  struct Item {
    std::uint32_t bucket = 0;
    std::uint64_t label = 0;
    Handle prev = kNone;
    Handle next = kNone;
    bool live = false;
  };
  struct Bucket {
    std::uint64_t label = 0;
    std::uint32_t count = 0;
    Handle first = kNone;
    Handle last = kNone;
    std::uint32_t prev = kNone;
    std::uint32_t next = kNone;
  };

  Handle new_item();
  std::uint32_t new_bucket();
  std::uint32_t bucket_insert_after(std::uint32_t b);
  void split_bucket(std::uint32_t b);
  void relabel_bucket(std::uint32_t b);

  std::vector<Item> items_;
  std::vector<Handle> free_items_;
  std::vector<Bucket> buckets_;
  std::vector<std::uint32_t> free_buckets_;
  Handle head_ = kNone;
  std::uint32_t bucket_head_ = kNone;
  std::size_t size_ = 0;
  Counters counters_;
};

}  // namespace sst
