import java.util.ArrayList;
import java.util.List;

static boolean isEven(int k) {
    return k % 2 == 0;
}

static List<Integer> evensList(int n) {
    List<Integer> found = new ArrayList<Integer>();
    for (int i = 0; i < n; i++) {
        if (isEven(i)) {
            found.add(i);
        }
    }
    return found;
}
