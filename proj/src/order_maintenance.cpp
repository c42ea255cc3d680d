#include "rlbwt/order_maintenance.hpp"

#include <stdexcept>
#include <string>

namespace rlbwt {

namespace {

constexpr uint64_t k_first_label = uint64_t{1} << 63;
constexpr uint64_t k_max_label = ~uint64_t{0};

}  // namespace

order_list::~order_list() {
  item* it = head_;
  while (it != nullptr) {
    item* next = it->next_;
    delete it;
    it = next;
  }
}

order_list::item* order_list::insert_after(item* anchor, void* payload) {
  item* x = new item;
  x->payload_ = payload;

  if (anchor == nullptr) {
    x->next_ = head_;
    if (head_ != nullptr) {
      head_->prev_ = x;
    } else {
      tail_ = x;
    }
    head_ = x;
  } else {
    x->prev_ = anchor;
    x->next_ = anchor->next_;
    anchor->next_ = x;
    if (x->next_ != nullptr) {
      x->next_->prev_ = x;
    } else {
      tail_ = x;
    }
  }
  ++size_;

  item* p = x->prev_;
  item* n = x->next_;
  if (p == nullptr && n == nullptr) {
    x->label_ = k_first_label;
    return x;
  }
  if (p != nullptr && n != nullptr) {
    if (n->label_ - p->label_ >= 2) {
      x->label_ = p->label_ + (n->label_ - p->label_) / 2;
      return x;
    }
  } else if (p == nullptr) {
    if (n->label_ > 0) {
      x->label_ = n->label_ / 2;
      return x;
    }
  } else {
    if (p->label_ < k_max_label) {
      const uint64_t gap = k_max_label - p->label_;
      x->label_ = p->label_ + (gap / 2 > 0 ? gap / 2 : 1);
      return x;
    }
  }

  // No free integer between the neighbors.
  x->label_ = p != nullptr ? p->label_ : n->label_;
  relabel_around(x);
  return x;
}

void order_list::relabel_around(item* x) {
  // Smallest enclosing aligned range [start, start + 2^i) whose occupancy
  // is below (4/3)^i; labels inside it are redistributed uniformly.
  long double threshold = 1.0L;
  for (unsigned i = 1; i < 64; ++i) {
    threshold *= 4.0L / 3.0L;
    const uint64_t width = uint64_t{1} << i;
    const uint64_t start = x->label_ & ~(width - 1);
    const uint64_t last = start + (width - 1);

    item* lo = x;
    while (lo->prev_ != nullptr && lo->prev_->label_ >= start) {
      lo = lo->prev_;
    }
    item* hi = x;
    while (hi->next_ != nullptr && hi->next_->label_ <= last) {
      hi = hi->next_;
    }
    uint64_t count = 1;
    for (item* it = lo; it != hi; it = it->next_) {
      ++count;
    }

    if (static_cast<long double>(count) < threshold && count <= width) {
      const uint64_t step = width / count;
      uint64_t label = start;
      for (item* it = lo;; it = it->next_) {
        it->label_ = label;
        label += step;
        if (it == hi) {
          break;
        }
      }
      relabeled_total_ += count;
      return;
    }
  }

  // The whole label space is too dense around x (unreachable below ~2^60
  // items); rebuild every label uniformly.
  const uint64_t step = k_max_label / (static_cast<uint64_t>(size_) + 1);
  uint64_t label = step;
  for (item* it = head_; it != nullptr; it = it->next_) {
    it->label_ = label;
    label += step;
  }
  relabeled_total_ += size_;
}

void order_list::erase(item* it) {
  if (it == nullptr) {
    throw invalid_handle_error("order_list::erase: null item");
  }
  if (it->prev_ != nullptr) {
    it->prev_->next_ = it->next_;
  } else {
    head_ = it->next_;
  }
  if (it->next_ != nullptr) {
    it->next_->prev_ = it->prev_;
  } else {
    tail_ = it->prev_;
  }
  delete it;
  --size_;
}

void order_list::audit() const {
  size_t count = 0;
  const item* prev = nullptr;
  for (const item* it = head_; it != nullptr; it = it->next_) {
    if (it->prev_ != prev) {
      throw std::logic_error("order_list: broken prev link");
    }
    if (prev != nullptr && prev->label_ >= it->label_) {
      throw std::logic_error("order_list: labels not strictly increasing");
    }
    prev = it;
    ++count;
  }
  if (prev != tail_) {
    throw std::logic_error("order_list: tail does not match chain");
  }
  if (count != size_) {
    throw std::logic_error("order_list: size mismatch");
  }
}

}  // namespace rlbwt
