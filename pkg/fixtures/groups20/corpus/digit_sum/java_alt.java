static int digitSum(int n) {
    String text = Integer.toString(n < 0 ? -n : n);
    int total = 0;
    for (int i = 0; i < text.length(); i++) {
        total += text.charAt(i) - '0';
    }
    return total;
}
