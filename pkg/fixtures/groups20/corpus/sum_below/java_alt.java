static int sumBelow(int n) {
    int m = n > 0 ? n : 0;
    return m * (m - 1) / 2;
}
