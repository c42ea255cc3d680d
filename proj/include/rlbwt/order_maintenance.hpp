#ifndef RLBWT_ORDER_MAINTENANCE_HPP_
#define RLBWT_ORDER_MAINTENANCE_HPP_

#include <cstddef>
#include <cstdint>

#include "rlbwt/errors.hpp"

namespace rlbwt {

// Dynamic list labeling. Items form a doubly-linked chain and carry 64-bit
// labels that are strictly increasing from head to tail, so an order query
// is a single integer comparison. When an insertion finds no free integer
// between its neighbors, the labels of the smallest enclosing tag range
// that is sparse enough are spread out uniformly.
class order_list {
 public:
  class item {
   public:
    uint64_t label() const noexcept { return label_; }
    item* prev() const noexcept { return prev_; }
    item* next() const noexcept { return next_; }
    void* payload() const noexcept { return payload_; }
    void set_payload(void* p) noexcept { payload_ = p; }

   private:
    uint64_t label_ = 0;
    item* prev_ = nullptr;
    item* next_ = nullptr;
    void* payload_ = nullptr;
    friend class order_list;
  };

  order_list() = default;
  ~order_list();
  order_list(const order_list&) = delete;
  order_list& operator=(const order_list&) = delete;

  // Places a new item immediately after anchor, or at the head when anchor
  // is null. The returned pointer stays valid until erase.
  item* insert_after(item* anchor, void* payload = nullptr);

  void erase(item* it);

  // True iff a comes strictly before b. O(1).
  static bool precedes(const item* a, const item* b) noexcept {
    return a->label_ < b->label_;
  }

  item* head() const noexcept { return head_; }
  item* tail() const noexcept { return tail_; }
  size_t size() const noexcept { return size_; }

  // Number of items that have received a new label in relabeling passes,
  // summed over the lifetime of the list.
  uint64_t relabeled_total() const noexcept { return relabeled_total_; }

  // Throws std::logic_error if the chain or the label order is broken.
  void audit() const;

 private:
  void relabel_around(item* x);

  item* head_ = nullptr;
  item* tail_ = nullptr;
  size_t size_ = 0;
  uint64_t relabeled_total_ = 0;
};

}  // namespace rlbwt

#endif  // RLBWT_ORDER_MAINTENANCE_HPP_
