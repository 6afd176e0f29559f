(restrictions
  (= sum@1 sum@2)
  (= sum@1 y@2)
  (< sum@1 y@2)
  (= sum@1 (+ sum@2 (select A@2 i@2) y@2))
  (<= b@2 0))
