static int fibClamped(int n) {
    if (n < 0) {
        return 0;
    }
    int k = n < 40 ? n : 40;
    int a = 0;
    int b = 1;
    for (int i = 0; i < k; i++) {
        int next = a + b;
        a = b;
        b = next;
    }
    return a;
}
