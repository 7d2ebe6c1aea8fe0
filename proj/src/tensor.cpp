#include "ctclass/tensor.hpp"

#include <algorithm>

#include "ctclass/common.hpp"

namespace ctclass {

std::size_t shape_numel(const std::vector<int>& shape) {
  std::size_t n = 1;
  for (int d : shape) {
    if (d < 0) throw ShapeError("negative tensor dimension in " + shape_to_string(shape));
    n *= static_cast<std::size_t>(d);
  }
  return n;
}

std::string shape_to_string(const std::vector<int>& shape) {
  std::string out = "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i > 0) out += "x";
    out += std::to_string(shape[i]);
  }
  out += "]";
  return out;
}

Tensor::Tensor(std::vector<int> shape)
    : shape_(std::move(shape)), data_(shape_numel(shape_), 0.0f) {}

Tensor::Tensor(std::vector<int> shape, float fill_value)
    : shape_(std::move(shape)), data_(shape_numel(shape_), fill_value) {}

void Tensor::fill(float v) { std::fill(data_.begin(), data_.end(), v); }

Tensor Tensor::reshaped(std::vector<int> new_shape) const& {
  Tensor t = *this;
  return std::move(t).reshaped(std::move(new_shape));
}

Tensor Tensor::reshaped(std::vector<int> new_shape) && {
  if (shape_numel(new_shape) != data_.size()) {
    throw ShapeError("reshape " + shape_to_string(shape_) + " -> " +
                     shape_to_string(new_shape) + " changes element count");
  }
  shape_ = std::move(new_shape);
  return std::move(*this);
}

std::string Tensor::shape_string() const { return shape_to_string(shape_); }

}  // namespace ctclass
