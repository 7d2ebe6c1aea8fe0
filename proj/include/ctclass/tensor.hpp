#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace ctclass {

// Dense row-major float32 tensor. Images are NHWC (or HWC for a single
// image); dense activations are [batch x features]. Value semantics --
// copies copy the buffer.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);
  Tensor(std::vector<int> shape, float fill_value);

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int i) const { return shape_[static_cast<std::size_t>(i)]; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  float* data() { return data_.data(); }
  const float* data() const { return data_.data(); }
  std::vector<float>& storage() { return data_; }
  const std::vector<float>& storage() const { return data_; }

  void fill(float v);
  void zero() { fill(0.0f); }

  // element count check is the caller's job for the flat accessors
  float& operator[](std::size_t i) { return data_[i]; }
  float operator[](std::size_t i) const { return data_[i]; }

  // 2D [rows x cols]
  float& at(int i, int j) { return data_[idx2(i, j)]; }
  float at(int i, int j) const { return data_[idx2(i, j)]; }
  // 3D [h x w x c]
  float& at(int y, int x, int c) { return data_[idx3(y, x, c)]; }
  float at(int y, int x, int c) const { return data_[idx3(y, x, c)]; }
  // 4D [n x h x w x c]
  float& at(int n, int y, int x, int c) { return data_[idx4(n, y, x, c)]; }
  float at(int n, int y, int x, int c) const { return data_[idx4(n, y, x, c)]; }

  // Same data, new shape; element counts must match.
  Tensor reshaped(std::vector<int> new_shape) const&;
  Tensor reshaped(std::vector<int> new_shape) &&;

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  std::string shape_string() const;

 private:
  std::size_t idx2(int i, int j) const {
    return static_cast<std::size_t>(i) * shape_[1] + j;
  }
  std::size_t idx3(int y, int x, int c) const {
    return (static_cast<std::size_t>(y) * shape_[1] + x) * shape_[2] + c;
  }
  std::size_t idx4(int n, int y, int x, int c) const {
    return ((static_cast<std::size_t>(n) * shape_[1] + y) * shape_[2] + x) * shape_[3] + c;
  }

  std::vector<int> shape_;
  std::vector<float> data_;
};

std::size_t shape_numel(const std::vector<int>& shape);
std::string shape_to_string(const std::vector<int>& shape);

}  // namespace ctclass
