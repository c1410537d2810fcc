static int digitSum(int n) {
    int m = n < 0 ? -n : n;
    int total = 0;
    while (m > 0) {
        total += m % 10;
        m = m / 10;
    }
    return total;
}
